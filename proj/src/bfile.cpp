#include "polycauchy/bfile.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polycauchy {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw std::invalid_argument("b-file line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

BFile parse_bfile(std::istream& in) {
    BFile out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v = trim(line);
        if (v.empty() || v.front() == '#') continue;

        std::istringstream tokens{std::string(v)};
        std::string index_tok, value_tok, extra;
        tokens >> index_tok >> value_tok;
        if (value_tok.empty()) fail(lineno, "expected \"index value\"");
        if (tokens >> extra) fail(lineno, "trailing content \"" + extra + "\"");
        if (!is_integer_token(index_tok) || !is_integer_token(value_tok)) {
            fail(lineno, "cannot parse \"" + std::string(v) + "\"");
        }

        long long index = 0;
        const auto [ptr, ec] =
            std::from_chars(index_tok.data(), index_tok.data() + index_tok.size(), index);
        if (ec != std::errc() || ptr != index_tok.data() + index_tok.size()) {
            fail(lineno, "index out of range \"" + index_tok + "\"");
        }
        if (!out.entries.empty() && out.entries.back().index >= index) {
            fail(lineno, "indices must be strictly increasing");
        }
        out.entries.push_back(BFileEntry{index, BigInt(value_tok)});
    }
    return out;
}

BFile load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open b-file \"" + path + "\"");
    return parse_bfile(in);
}

}  // namespace polycauchy

#include "autcl/descriptor.hpp"

#include <cctype>

namespace autcl {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    int max_order;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a family name", pos);
        return text.substr(start, pos - start);
    }

    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) throw ParseError("number too large", start);
        }
        return static_cast<int>(v);
    }

    FiniteGroup group() {
        skip_ws();
        std::size_t at = pos;
        std::string fam = word();
        std::string lower;
        for (char c : fam) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        skip_ws();
        try {
            if (lower == "prod") {
                expect('(');
                FiniteGroup a = group();
                skip_ws();
                expect(',');
                FiniteGroup b = group();
                skip_ws();
                expect(')');
                return direct_product(a, b, max_order);
            }
            expect(':');
            if (lower == "z") return make_cyclic(number());
            if (lower == "d") return make_dihedral(number());
            if (lower == "q") return make_dicyclic(number());
            if (lower == "heis") return make_heisenberg(number(), max_order);
            if (lower == "ea") {
                int p = number();
                skip_ws();
                expect(',');
                int k = number();
                return make_elementary_abelian(p, k, max_order);
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), at);
        }
        throw ParseError("unknown family '" + fam + "'", at);
    }
};

}  // namespace

FiniteGroup parse_group_descriptor(const std::string& text, int max_order) {
    Parser p{text, 0, max_order};
    FiniteGroup g = p.group();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return g;
}

}  // namespace autcl

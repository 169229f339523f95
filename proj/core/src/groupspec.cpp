#include "reflcat/groupspec.hpp"

#include "reflcat/errors.hpp"

#include <cctype>

namespace reflcat {

GroupSpec GroupSpec::imprimitive(unsigned de, unsigned e, unsigned n) {
    GroupSpec s;
    s.kind = SpecKind::Imprimitive;
    s.de = de;
    s.e = e;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::shephard_todd(unsigned k) {
    GroupSpec s;
    s.kind = SpecKind::ShephardTodd;
    s.st = k;
    return s;
}

GroupSpec GroupSpec::sym(unsigned n) {
    GroupSpec s;
    s.kind = SpecKind::Sym;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::cyc(unsigned d) {
    GroupSpec s;
    s.kind = SpecKind::Cyc;
    s.de = d;
    return s;
}

GroupSpec GroupSpec::dih(unsigned e) {
    GroupSpec s;
    s.kind = SpecKind::Dih;
    s.e = e;
    return s;
}

namespace {

// Tiny recursive-descent reader over the spec grammar.
struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(i, w.size()) == w) {
            i += w.size();
            return true;
        }
        return false;
    }
    unsigned number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw GroupSpecError("expected a number in group spec at position " +
                                 std::to_string(i));
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<unsigned>(s[i] - '0');
            if (v > 1000000) throw GroupSpecError("group spec parameter too large");
            ++i;
        }
        return static_cast<unsigned>(v);
    }
    void expect(char c) {
        if (!eat(c))
            throw GroupSpecError(std::string("expected '") + c + "' in group spec");
    }
    void expect_end() {
        skip_ws();
        if (i != s.size()) throw GroupSpecError("trailing characters in group spec");
    }
};

} // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
    Cursor c{text};
    if (c.eat_word("Sym")) {
        c.expect('(');
        unsigned n = c.number();
        c.expect(')');
        c.expect_end();
        return sym(n);
    }
    if (c.eat_word("Cyc")) {
        c.expect('(');
        unsigned d = c.number();
        c.expect(')');
        c.expect_end();
        return cyc(d);
    }
    if (c.eat_word("Dih")) {
        c.expect('(');
        unsigned e = c.number();
        c.expect(')');
        c.expect_end();
        return dih(e);
    }
    if (c.eat('G')) {
        if (c.eat('(')) {
            unsigned de = c.number();
            c.expect(',');
            unsigned e = c.number();
            c.expect(',');
            unsigned n = c.number();
            c.expect(')');
            c.expect_end();
            return imprimitive(de, e, n);
        }
        unsigned k = c.number();
        c.expect_end();
        return shephard_todd(k);
    }
    throw GroupSpecError("unrecognized group spec: \"" + std::string(text) + "\"");
}

std::string GroupSpec::str() const {
    switch (kind) {
        case SpecKind::Imprimitive:
            return "G(" + std::to_string(de) + "," + std::to_string(e) + "," +
                   std::to_string(n) + ")";
        case SpecKind::ShephardTodd:
            return "G" + std::to_string(st);
        case SpecKind::Sym:
            return "Sym(" + std::to_string(n) + ")";
        case SpecKind::Cyc:
            return "Cyc(" + std::to_string(de) + ")";
        case SpecKind::Dih:
            return "Dih(" + std::to_string(e) + ")";
    }
    return "?";
}

} // namespace reflcat

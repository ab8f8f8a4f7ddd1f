#include "skewcap/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace skewcap {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    char take() {
        const char c = s[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) take();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }
};

class ElementParser {
  public:
    ElementParser(int n, Cursor& c) : n_(n), c_(c) {}

    WeylElement parse_sum() {
        c_.skip_ws();
        int sign = 1;
        while (!c_.eof() && (c_.peek() == '+' || c_.peek() == '-')) {
            if (c_.take() == '-') sign = -sign;
            c_.skip_ws();
        }
        WeylElement acc = parse_term().scale(Rational(sign));
        c_.skip_ws();
        while (!c_.eof() && (c_.peek() == '+' || c_.peek() == '-')) {
            sign = c_.take() == '-' ? -1 : 1;
            c_.skip_ws();
            while (!c_.eof() && (c_.peek() == '+' || c_.peek() == '-')) {
                if (c_.take() == '-') sign = -sign;
                c_.skip_ws();
            }
            acc += parse_term().scale(Rational(sign));
            c_.skip_ws();
        }
        return acc;
    }

  private:
    bool at_factor_start() {
        if (c_.eof()) return false;
        const char ch = c_.peek();
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'u' || ch == 'x' || ch == 'd' || ch == '(';
    }

    WeylElement parse_term() {
        WeylElement acc = parse_factor();
        c_.skip_ws();
        while (!c_.eof()) {
            if (c_.peek() == '*') {
                c_.take();
                c_.skip_ws();
                acc = weyl_mul(acc, parse_factor());
                c_.skip_ws();
            } else if (at_factor_start()) {
                acc = weyl_mul(acc, parse_factor());
                c_.skip_ws();
            } else {
                break;
            }
        }
        return acc;
    }

    WeylElement parse_factor() {
        WeylElement base = parse_primary();
        c_.skip_ws();
        if (!c_.eof() && c_.peek() == '^') {
            c_.take();
            c_.skip_ws();
            const long e = parse_integer();
            if (e < 0) c_.fail("negative exponent");
            base = weyl_pow(base, static_cast<int>(e));
        }
        return base;
    }

    WeylElement parse_primary() {
        c_.skip_ws();
        if (c_.eof()) c_.fail("unexpected end of expression");
        const char ch = c_.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const long num = parse_integer();
            if (!c_.eof() && c_.peek() == '/') {
                c_.take();
                const long den = parse_integer();
                if (den == 0) c_.fail("zero denominator");
                return WeylElement::scalar(n_, UPoly(Rational(num, den)));
            }
            return WeylElement::scalar(n_, UPoly(Rational(num)));
        }
        if (ch == 'u') {
            c_.take();
            return WeylElement::scalar(n_, UPoly::u());
        }
        if (ch == 'x' || ch == 'd') {
            c_.take();
            const GenKind kind = ch == 'x' ? GenKind::Mult : GenKind::Deriv;
            expect('[');
            const long i = parse_integer();
            expect(',');
            const long j = parse_integer();
            expect(']');
            if (i < 1 || i > n_ || j < 1 || j > n_) c_.fail("generator index outside [1,n]");
            return signed_generator(n_, static_cast<int>(i), static_cast<int>(j), kind);
        }
        if (ch == '(') {
            c_.take();
            WeylElement inner = parse_sum();
            expect(')');
            return inner;
        }
        c_.fail(std::string("unexpected character '") + ch + "'");
    }

    void expect(char want) {
        c_.skip_ws();
        if (c_.eof() || c_.peek() != want) c_.fail(std::string("expected '") + want + "'");
        c_.take();
    }

    long parse_integer() {
        c_.skip_ws();
        bool neg = false;
        if (!c_.eof() && (c_.peek() == '-' || c_.peek() == '+')) neg = c_.take() == '-';
        if (c_.eof() || !std::isdigit(static_cast<unsigned char>(c_.peek()))) c_.fail("expected integer");
        long v = 0;
        while (!c_.eof() && std::isdigit(static_cast<unsigned char>(c_.peek()))) {
            v = v * 10 + (c_.take() - '0');
            if (v > 1000000000L) c_.fail("integer literal too large");
        }
        return neg ? -v : v;
    }

    int n_;
    Cursor& c_;
};

// Largest generator index mentioned anywhere in the text; 0 if none.
int scan_max_index(const std::string& text) {
    int best = 0;
    for (std::size_t p = 0; p + 1 < text.size(); ++p) {
        if ((text[p] == 'x' || text[p] == 'd') && text[p + 1] == '[') {
            std::size_t q = p + 2;
            int cur = 0;
            while (q < text.size() && (std::isdigit(static_cast<unsigned char>(text[q])) || text[q] == ',' ||
                                       text[q] == ' ' || text[q] == '-')) {
                if (std::isdigit(static_cast<unsigned char>(text[q]))) {
                    cur = cur * 10 + (text[q] - '0');
                } else {
                    best = std::max(best, cur);
                    cur = 0;
                }
                ++q;
            }
            best = std::max(best, cur);
        }
    }
    return best;
}

}  // namespace

WeylElement parse_weyl_element(int n, const std::string& text) {
    Cursor c{text};
    ElementParser p(n, c);
    WeylElement e = p.parse_sum();
    c.skip_ws();
    if (!c.eof()) c.fail("trailing input");
    return e;
}

UPoly parse_upoly(const std::string& text) {
    const WeylElement e = parse_weyl_element(1, text);
    if (!e.is_scalar()) throw ParseError(1, 1, "expected a polynomial in u only");
    return e.scalar_part();
}

ParsedMatrix parse_matrix_file(const std::string& contents) {
    std::istringstream in(contents);
    std::string raw;
    int lineno = 0;
    int dim = 0, vars = 0;
    std::vector<std::tuple<int, int, int, std::string>> pending;  // line, i, j, expr

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "dim") {
            if (!(ls >> dim) || dim < 1) throw ParseError(lineno, 1, "malformed dim line");
            continue;
        }
        if (first == "vars") {
            if (!(ls >> vars) || vars < 1) throw ParseError(lineno, 1, "malformed vars line");
            continue;
        }
        int i = 0, j = 0;
        try {
            i = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError(lineno, 1, "expected 'dim', 'vars', or an entry line");
        }
        if (!(ls >> j)) throw ParseError(lineno, 1, "entry line needs two indices");
        std::string expr;
        std::getline(ls, expr);
        if (expr.find_first_not_of(" \t\r") == std::string::npos)
            throw ParseError(lineno, 1, "entry line has no expression");
        pending.emplace_back(lineno, i, j, expr);
    }
    if (dim == 0) throw ParseError(lineno, 1, "missing dim line");

    if (vars == 0) {
        for (const auto& [ln, i, j, expr] : pending) vars = std::max(vars, scan_max_index(expr));
        if (vars == 0) vars = 1;
    }

    ParsedMatrix pm{dim, vars, {}};
    for (const auto& [ln, i, j, expr] : pending) {
        if (i < 1 || i > dim || j < 1 || j > dim) throw ParseError(ln, 1, "entry index outside [1,dim]");
        try {
            pm.entries.emplace_back(i, j, parse_weyl_element(vars, expr));
        } catch (const ParseError& pe) {
            throw ParseError(ln, pe.col(), pe.what());
        }
    }
    return pm;
}

namespace {

OpMatrix complete(const ParsedMatrix& pm, bool anti) {
    OpMatrix m = op_zero(pm.dim, pm.n);
    std::vector<bool> given(static_cast<std::size_t>(pm.dim) * pm.dim, false);
    auto mark = [&](int i, int j) { given[static_cast<std::size_t>(i - 1) * pm.dim + (j - 1)] = true; };
    auto seen = [&](int i, int j) { return given[static_cast<std::size_t>(i - 1) * pm.dim + (j - 1)]; };

    for (const auto& [i, j, e] : pm.entries) {
        m.at(i, j) = e;
        mark(i, j);
    }
    for (const auto& [i, j, e] : pm.entries) {
        const int mi = anti ? neg_index(j, pm.dim) : j;
        const int mj = anti ? neg_index(i, pm.dim) : i;
        if (!seen(mi, mj)) {
            m.at(mi, mj) = -e;
            mark(mi, mj);
        }
    }
    return m;
}

}  // namespace

OpMatrix complete_alternating(const ParsedMatrix& pm) { return complete(pm, false); }
OpMatrix complete_anti_alternating(const ParsedMatrix& pm) { return complete(pm, true); }

}  // namespace skewcap

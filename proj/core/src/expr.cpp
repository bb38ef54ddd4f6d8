#include "crsym/expr.hpp"

#include <algorithm>
#include <cctype>

namespace crsym {

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) error(std::string("expected '") + c + "' (" + what + ")");
    }

    [[noreturn]] void error(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(ErrorCode::SyntaxError,
             msg + " at line " + std::to_string(line) + ", column " + std::to_string(col));
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        return Integer(text_.substr(start, pos_ - start));
    }

    long uint_exponent() {
        Integer v = integer();
        if (!v.fits_slong_p()) error("exponent too large");
        return v.get_si();
    }

    // nonneg rational literal p or p/q
    Rational rational_literal() {
        Integer num = integer();
        if (accept('/')) {
            Integer den = integer();
            if (den == 0) error("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    // ( re [+|- im i] ) | ( [-] i ) | ( rational ) forms; leading sign allowed
    GaussianRational paren_complex() {
        expect('(', "coefficient");
        GaussianRational acc(0);
        bool first = true;
        while (true) {
            int sign = 1;
            if (accept('-'))
                sign = -1;
            else if (accept('+'))
                sign = 1;
            else if (!first)
                break;
            GaussianRational part;
            if (accept('i')) {
                part = GaussianRational(Rational(0), Rational(sign));
            } else {
                Rational r = rational_literal();
                if (accept('i'))
                    part = GaussianRational(Rational(0), Rational(sign) * r);
                else
                    part = GaussianRational(Rational(sign) * r);
            }
            acc += part;
            first = false;
            char c = peek();
            if (c != '+' && c != '-') break;
        }
        expect(')', "coefficient");
        return acc;
    }

    std::size_t pos() const { return pos_; }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

struct RawTerm {
    GaussianRational coeff;
    MultiIndex idx;
};

// variables: for surfaces {z, zb, u}; for maps {z, w} with w stored in gamma.
std::vector<RawTerm> parse_terms(const std::string& text, bool map_vars) {
    Scanner sc(text);
    std::vector<RawTerm> terms;
    if (sc.eof()) sc.error("empty expression");
    bool first = true;
    while (!sc.eof()) {
        int sign = 1;
        if (sc.accept('-'))
            sign = -1;
        else if (sc.accept('+'))
            sign = 1;
        else if (!first)
            sc.error("expected '+' or '-' between terms");
        first = false;

        GaussianRational coeff(sign);
        MultiIndex idx{0, 0, 0};
        bool any_factor = false;
        while (true) {
            if (sc.at_digit()) {
                coeff *= GaussianRational(sc.rational_literal());
                any_factor = true;
            } else if (sc.peek() == '(') {
                coeff *= sc.paren_complex();
                any_factor = true;
            } else if (sc.peek() == 'z') {
                sc.accept('z');
                int* slot = &idx.alpha;
                if (!map_vars && sc.accept('b')) slot = &idx.beta;
                long e = 1;
                if (sc.accept('^')) e = sc.uint_exponent();
                *slot += static_cast<int>(e);
                any_factor = true;
            } else if (!map_vars && sc.peek() == 'u') {
                sc.accept('u');
                long e = 1;
                if (sc.accept('^')) e = sc.uint_exponent();
                idx.gamma += static_cast<int>(e);
                any_factor = true;
            } else if (map_vars && sc.peek() == 'w') {
                sc.accept('w');
                long e = 1;
                if (sc.accept('^')) e = sc.uint_exponent();
                idx.gamma += static_cast<int>(e);
                any_factor = true;
            } else {
                sc.error("expected a coefficient or a variable");
            }
            if (!sc.accept('*')) break;
        }
        if (!any_factor) sc.error("empty term");
        terms.push_back(RawTerm{coeff, idx});
        char c = sc.peek();
        if (c != '+' && c != '-' && c != '\0') sc.error("unexpected trailing input");
    }
    return terms;
}

}  // namespace

SurfaceSpec parse_surface(const std::string& text, int truncation, std::optional<int> declared_k) {
    auto terms = parse_terms(text, false);

    int k = 0;
    if (declared_k) {
        if (*declared_k < 1) fail(ErrorCode::DomainError, "declared k must be positive");
        k = *declared_k;
    } else {
        for (const auto& t : terms) {
            if (t.coeff.is_zero()) continue;
            if (t.idx.gamma == 0 && t.idx.alpha >= 1 && t.idx.beta >= 1) {
                int d = t.idx.alpha + t.idx.beta;
                if (k == 0 || d < k) k = d;
            }
        }
        if (k == 0)
            fail(ErrorCode::NotFiniteType,
                 "no mixed z/zb term to detect the type from; declare k explicitly");
    }
    int W = truncation > 0 ? truncation : 4 * k;
    if (W < k) fail(ErrorCode::DomainError, "truncation below the type k");

    WeightedSeries s(k, W);
    for (const auto& t : terms) s.add_term(t.idx, t.coeff);

    if (!series_is_real(s)) {
        for (const auto& [idx, c] : s.terms()) {
            if (c != conj(s.coeff(conj_index(idx)))) {
                fail(ErrorCode::RealityViolation,
                     "missing conjugate partner for z^" + std::to_string(idx.alpha) + "*zb^" +
                         std::to_string(idx.beta) + "*u^" + std::to_string(idx.gamma));
            }
        }
    }

    SurfaceSpec spec;
    spec.expression = text;
    spec.truncation = W;
    spec.declared_k = declared_k;
    spec.k = k;
    spec.series = std::move(s);
    return spec;
}

std::vector<std::pair<MapIndex, GaussianRational>> parse_map_component(const std::string& text) {
    auto terms = parse_terms(text, true);
    std::vector<std::pair<MapIndex, GaussianRational>> out;
    out.reserve(terms.size());
    for (const auto& t : terms)
        out.emplace_back(MapIndex{t.idx.alpha, t.idx.gamma}, t.coeff);
    return out;
}

namespace {

std::string coefficient_prefix(const GaussianRational& c, bool leading) {
    // Returns the textual form of the coefficient including the separator
    // ("a - 2*..." style), leaving "" / "-" for unit coefficients.
    std::string sep = leading ? "" : " + ";
    if (c.is_real()) {
        Rational r = c.re;
        if (sgn(r) < 0) {
            sep = leading ? "-" : " - ";
            r = -r;
        }
        if (r == 1) return sep;
        return sep + to_string(r) + "*";
    }
    return sep + to_string(c) + "*";
}

}  // namespace

std::string print_surface(const WeightedSeries& s) {
    if (s.is_zero()) return "0";
    std::vector<std::pair<MultiIndex, GaussianRational>> sorted(s.terms().begin(), s.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
        int wx = weight(x.first, s.grading());
        int wy = weight(y.first, s.grading());
        if (wx != wy) return wx < wy;
        return inv_lex_less(x.first, y.first);
    });
    std::string out;
    bool leading = true;
    for (const auto& [idx, c] : sorted) {
        std::string mono;
        auto append_power = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        append_power("z", idx.alpha);
        append_power("zb", idx.beta);
        append_power("u", idx.gamma);
        std::string prefix = coefficient_prefix(c, leading);
        if (mono.empty()) {
            // constant term: keep an explicit coefficient
            std::string cs = to_string(c);
            out += (leading ? "" : " + ") + cs;
        } else {
            out += prefix + mono;
        }
        leading = false;
    }
    return out;
}

}  // namespace crsym

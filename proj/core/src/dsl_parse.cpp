#include <ncres/dsl.hpp>

#include <cctype>
#include <optional>
#include <set>
#include <vector>

namespace ncres
{

namespace
{

enum class tok { integer, ident, symbol, end };

struct token {
    tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<token> lex(std::string_view src)
{
    std::vector<token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                advance(1);
            }
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({tok::integer, std::string(src.substr(i, j - i)), l, cl});
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({tok::ident, std::string(src.substr(i, j - i)), l, cl});
            advance(j - i);
        } else if (std::string_view("+-*/^(){},").find(c) != std::string_view::npos) {
            out.push_back({tok::symbol, std::string(1, c), l, cl});
            advance(1);
        } else {
            throw parse_error(parse_error_kind::syntax, std::string("unexpected character '") + c + "'", l, cl);
        }
    }
    out.push_back({tok::end, "", line, col});
    return out;
}

using raw_terms = TermMap<CyclotomicScalar>;

class parser
{
public:
    explicit parser(std::string_view src) : m_tokens(lex(src)) {}

    AnySymbol document()
    {
        expect_keyword("dim");
        const token &dim_tok = peek();
        m_dim = integer();
        if (m_dim < 2 || m_dim > 8) {
            fail(parse_error_kind::structure, "dimension must be between 2 and 8", dim_tok);
        }
        expect_keyword("order");
        const int order = integer();
        expect_keyword("floor");
        const int floor = integer();
        if (is_keyword("theta")) {
            const token &t = next();
            m_theta_token = t;
            m_theta = rational();
        }

        struct block {
            int degree;
            token at;
            raw_terms terms;
        };
        std::vector<block> blocks;
        std::set<int> seen;
        while (peek().kind != tok::end) {
            const token at = peek();
            expect_keyword("deg");
            const int d = integer();
            if (!seen.insert(d).second) {
                fail(parse_error_kind::structure, "duplicate block for degree " + std::to_string(d), at);
            }
            if (d > order || d < floor) {
                fail(parse_error_kind::structure,
                     "block degree " + std::to_string(d) + " outside [" + std::to_string(floor) + ", "
                         + std::to_string(order) + "]",
                     at);
            }
            expect_symbol("{");
            raw_terms terms;
            if (!is_symbol("}")) {
                terms = expr();
            }
            expect_symbol("}");
            for (const auto &[k, c] : terms) {
                if (k.homogeneity() != d) {
                    fail(parse_error_kind::homogeneity,
                         "block declared degree " + std::to_string(d) + " contains a term of degree "
                             + std::to_string(k.homogeneity()),
                         at);
                }
            }
            blocks.push_back({d, at, std::move(terms)});
        }

        if (m_first_e && m_first_nc) {
            const token &later = m_first_e->line > m_first_nc->line
                                         || (m_first_e->line == m_first_nc->line
                                             && m_first_e->column > m_first_nc->column)
                                     ? *m_first_e
                                     : *m_first_nc;
            fail(parse_error_kind::mixed_generators, "torus modes e(...) and U/V generators cannot be mixed", later);
        }
        if (m_theta && !m_first_nc && !blocks.empty()) {
            fail(parse_error_kind::theta_without_generators, "theta given but the symbol uses no U/V generators",
                 *m_theta_token);
        }

        const bool nc = m_first_nc.has_value() || m_theta.has_value();
        if (nc) {
            ClassicalSymbolT<CyclotomicScalar> s(m_dim, order, floor);
            for (const auto &b : blocks) {
                s.set_component(HomogeneousComponentT<CyclotomicScalar>(m_dim, b.degree, b.terms));
            }
            return NCSymbol(ThetaParameter::exact(m_theta.value_or(Rational(0))), std::move(s));
        }
        ClassicalSymbol s(m_dim, order, floor);
        for (const auto &b : blocks) {
            TermMap<ComplexRational> t;
            for (const auto &[k, c] : b.terms) {
                t.emplace(k, c.as_complex_rational());
            }
            s.set_component(HomogeneousComponent(m_dim, b.degree, t));
        }
        return s;
    }

    NCPolynomial element(const ThetaParameter &theta)
    {
        m_dim = 2;
        m_theta = theta.rational();
        const raw_terms terms = expr();
        if (peek().kind != tok::end) {
            fail(parse_error_kind::syntax, "unexpected '" + peek().text + "'", peek());
        }
        if (m_first_e) {
            fail(parse_error_kind::mixed_generators, "torus modes e(...) are not algebra elements", *m_first_e);
        }
        NCPolynomial p(theta);
        for (const auto &[k, c] : terms) {
            if (k.npow != 0 || k.alpha != MultiIndex{0, 0}) {
                fail(parse_error_kind::syntax, "algebra elements cannot contain xi or r", m_tokens.front());
            }
            p.add(k.mode[0], k.mode[1], c);
        }
        return p;
    }

private:
    [[noreturn]] void fail(parse_error_kind kind, const std::string &msg, const token &at) const
    {
        throw parse_error(kind, msg, at.line, at.column);
    }

    const token &peek() const
    {
        return m_tokens[m_pos];
    }
    const token &next()
    {
        const token &t = m_tokens[m_pos];
        if (t.kind != tok::end) {
            ++m_pos;
        }
        return t;
    }
    bool is_keyword(std::string_view kw) const
    {
        return peek().kind == tok::ident && peek().text == kw;
    }
    bool is_symbol(std::string_view s) const
    {
        return peek().kind == tok::symbol && peek().text == s;
    }
    void expect_keyword(std::string_view kw)
    {
        if (!is_keyword(kw)) {
            fail(parse_error_kind::syntax, "expected '" + std::string(kw) + "', found " + describe(peek()), peek());
        }
        next();
    }
    void expect_symbol(std::string_view s)
    {
        if (!is_symbol(s)) {
            fail(parse_error_kind::syntax, "expected '" + std::string(s) + "', found " + describe(peek()), peek());
        }
        next();
    }
    static std::string describe(const token &t)
    {
        return t.kind == tok::end ? std::string("end of input") : "'" + t.text + "'";
    }

    // ["-"] digits
    int integer()
    {
        bool neg = false;
        if (is_symbol("-")) {
            next();
            neg = true;
        } else if (is_symbol("+")) {
            next();
        }
        const token &t = peek();
        if (t.kind != tok::integer) {
            fail(parse_error_kind::syntax, "expected integer, found " + describe(t), t);
        }
        next();
        if (t.text.size() > 9) {
            fail(parse_error_kind::syntax, "integer too large", t);
        }
        const int v = std::stoi(t.text);
        return neg ? -v : v;
    }

    Rational rational()
    {
        bool neg = false;
        if (is_symbol("-")) {
            next();
            neg = true;
        }
        const token &t = peek();
        if (t.kind != tok::integer) {
            fail(parse_error_kind::syntax, "expected rational, found " + describe(t), t);
        }
        next();
        std::string text = t.text;
        if (is_symbol("/")) {
            next();
            const token &d = peek();
            if (d.kind != tok::integer) {
                fail(parse_error_kind::syntax, "expected denominator, found " + describe(d), d);
            }
            next();
            if (mpz_class(d.text) == 0) {
                fail(parse_error_kind::syntax, "zero denominator", d);
            }
            text += "/" + d.text;
        }
        Rational q = parse_rational(text);
        return neg ? Rational(-q) : q;
    }

    MultiIndex zeros() const
    {
        return MultiIndex(static_cast<std::size_t>(m_dim), 0);
    }

    raw_terms constant(const CyclotomicScalar &c) const
    {
        raw_terms t;
        detail::accumulate(t, TermKey{zeros(), zeros(), 0}, c);
        return t;
    }

    raw_terms multiply(const raw_terms &a, const raw_terms &b) const
    {
        const nc_twist<CyclotomicScalar> twist(ThetaParameter::exact(m_theta.value_or(Rational(0))));
        raw_terms r;
        for (const auto &[ka, ca] : a) {
            for (const auto &[kb, cb] : b) {
                TermKey k{detail::add_index(ka.mode, kb.mode), detail::add_index(ka.alpha, kb.alpha), ka.npow + kb.npow};
                CyclotomicScalar c = ca * cb;
                if (m_dim == 2) {
                    if (auto ph = twist(ka.mode, kb.mode)) {
                        c *= *ph;
                    }
                }
                detail::accumulate(r, k, c);
            }
        }
        return r;
    }

    raw_terms expr()
    {
        raw_terms acc = term();
        while (is_symbol("+") || is_symbol("-")) {
            const bool minus = next().text == "-";
            for (const auto &[k, c] : term()) {
                detail::accumulate(acc, k, minus ? -c : c);
            }
        }
        return acc;
    }

    raw_terms term()
    {
        raw_terms acc = factor();
        while (is_symbol("*")) {
            next();
            acc = multiply(acc, factor());
        }
        return acc;
    }

    int optional_power()
    {
        if (is_symbol("^")) {
            next();
            return integer();
        }
        return 1;
    }

    raw_terms factor()
    {
        const token t = peek();
        if (is_symbol("-")) {
            next();
            raw_terms r;
            for (const auto &[k, c] : factor()) {
                r.emplace(k, -c);
            }
            return r;
        }
        if (is_symbol("(")) {
            next();
            raw_terms r = expr();
            expect_symbol(")");
            return r;
        }
        if (t.kind == tok::integer) {
            return constant(CyclotomicScalar(ComplexRational(rational())));
        }
        if (t.kind != tok::ident) {
            fail(parse_error_kind::syntax, "expected a factor, found " + describe(t), t);
        }
        next();
        if (t.text == "i") {
            return constant(CyclotomicScalar(ComplexRational::imaginary_unit()));
        }
        if (t.text == "w") {
            if (!m_theta) {
                fail(parse_error_kind::syntax, "'w' requires a theta header", t);
            }
            note_nc(t);
            const int k = optional_power();
            return constant(nc_phase<CyclotomicScalar>::eval(ThetaParameter::exact(*m_theta), k));
        }
        if (t.text == "e") {
            if (!m_first_e) {
                m_first_e = t;
            }
            expect_symbol("(");
            MultiIndex mode;
            mode.push_back(integer());
            while (is_symbol(",")) {
                next();
                mode.push_back(integer());
            }
            expect_symbol(")");
            if (static_cast<int>(mode.size()) != m_dim) {
                fail(parse_error_kind::structure,
                     "e(...) has " + std::to_string(mode.size()) + " entries, expected " + std::to_string(m_dim), t);
            }
            raw_terms r;
            r.emplace(TermKey{mode, zeros(), 0}, CyclotomicScalar(1));
            return r;
        }
        if (t.text == "U" || t.text == "V") {
            if (m_dim != 2) {
                fail(parse_error_kind::structure, "U/V generators require dim 2", t);
            }
            note_nc(t);
            const int k = optional_power();
            MultiIndex mode = t.text == "U" ? MultiIndex{k, 0} : MultiIndex{0, k};
            raw_terms r;
            r.emplace(TermKey{mode, zeros(), 0}, CyclotomicScalar(1));
            return r;
        }
        if (t.text == "r") {
            expect_symbol("^");
            const int p = integer();
            raw_terms r;
            r.emplace(TermKey{zeros(), zeros(), p}, CyclotomicScalar(1));
            return r;
        }
        if (t.text.size() > 2 && t.text.starts_with("xi")
            && std::all_of(t.text.begin() + 2, t.text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            const int j = t.text.size() > 5 ? 0 : std::stoi(t.text.substr(2));
            if (j < 1 || j > m_dim) {
                fail(parse_error_kind::structure, "variable " + t.text + " out of range for dim " + std::to_string(m_dim),
                     t);
            }
            const token &pow_at = peek();
            const int a = optional_power();
            if (a < 0) {
                fail(parse_error_kind::syntax, "negative power of " + t.text + "; use r^p for |xi| powers", pow_at);
            }
            MultiIndex alpha = zeros();
            alpha[static_cast<std::size_t>(j - 1)] = a;
            raw_terms r;
            r.emplace(TermKey{zeros(), alpha, 0}, CyclotomicScalar(1));
            return r;
        }
        fail(parse_error_kind::syntax, "unknown identifier '" + t.text + "'", t);
    }

    void note_nc(const token &t)
    {
        if (!m_first_nc) {
            m_first_nc = t;
        }
    }

    std::vector<token> m_tokens;
    std::size_t m_pos = 0;
    int m_dim = 2;
    std::optional<Rational> m_theta;
    std::optional<token> m_theta_token;
    std::optional<token> m_first_e;
    std::optional<token> m_first_nc;
};

} // namespace

AnySymbol parse_symbol(std::string_view text)
{
    parser p(text);
    return p.document();
}

ClassicalSymbol parse_classical_symbol(std::string_view text)
{
    AnySymbol s = parse_symbol_auto(text);
    if (auto *c = std::get_if<ClassicalSymbol>(&s)) {
        return std::move(*c);
    }
    throw validation_error("expected a symbol on the commutative torus, got a noncommutative one");
}

NCSymbol parse_nc_symbol(std::string_view text)
{
    AnySymbol s = parse_symbol_auto(text);
    if (auto *c = std::get_if<NCSymbol>(&s)) {
        return std::move(*c);
    }
    throw validation_error("expected a noncommutative symbol (U/V generators), got a commutative one");
}

NCPolynomial parse_nc_element(std::string_view text, const ThetaParameter &theta)
{
    parser p(text);
    return p.element(theta);
}

AnySymbol parse_symbol_auto(std::string_view text)
{
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        if (c == '{') {
            return parse_json_symbol(text);
        }
        break;
    }
    return parse_symbol(text);
}

} // namespace ncres

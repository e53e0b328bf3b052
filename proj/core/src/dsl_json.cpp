#include <ncres/dsl.hpp>

#include <numeric>
#include <set>

#include <json.hpp>

namespace ncres
{

namespace
{

using nlohmann::json;

[[noreturn]] void fail(parse_error_kind kind, const std::string &msg)
{
    throw parse_error(kind, msg, 0, 0);
}

json rational_json(const Rational &q)
{
    return to_string(q);
}

Rational rational_from(const json &j, const char *what)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const validation_error &e) {
            fail(parse_error_kind::syntax, std::string(what) + ": " + e.what());
        }
    }
    fail(parse_error_kind::syntax, std::string(what) + " must be an integer or a string \"a/b\"");
}

json term_json(const TermKey &k, const ComplexRational &c, bool nc, std::optional<int> phase)
{
    json t;
    t["coeff"] = {{"re", rational_json(c.re())}, {"im", rational_json(c.im())}};
    if (nc) {
        t["nc"] = k.mode;
        if (phase && *phase != 0) {
            t["phase"] = *phase;
        }
    } else {
        t["mode"] = k.mode;
    }
    t["alpha"] = k.alpha;
    t["npow"] = k.npow;
    return t;
}

MultiIndex index_from(const json &j, const char *what, std::size_t size)
{
    if (!j.is_array() || j.size() != size) {
        fail(parse_error_kind::structure, std::string(what) + " must be an array of " + std::to_string(size) + " integers");
    }
    MultiIndex m;
    for (const auto &v : j) {
        if (!v.is_number_integer()) {
            fail(parse_error_kind::syntax, std::string(what) + " entries must be integers");
        }
        m.push_back(v.get<int>());
    }
    return m;
}

} // namespace

std::string to_json(const AnySymbol &sigma, int indent)
{
    json doc;
    std::visit(
        [&](const auto &s) {
            using S = std::decay_t<decltype(s)>;
            json blocks = json::array();
            if constexpr (std::is_same_v<S, ClassicalSymbol>) {
                doc["dim"] = s.dim();
                doc["order"] = s.order();
                doc["floor"] = s.trusted_floor();
                for (const auto &[d, comp] : s.components()) {
                    json terms = json::array();
                    for (const auto &[k, c] : comp.terms()) {
                        terms.push_back(term_json(k, c, false, std::nullopt));
                    }
                    blocks.push_back({{"deg", d}, {"terms", terms}});
                }
            } else {
                doc["dim"] = 2;
                doc["order"] = s.order();
                doc["floor"] = s.trusted_floor();
                doc["theta"] = to_string(s.theta().rational());
                for (const auto &[d, comp] : s.symbol().components()) {
                    json terms = json::array();
                    for (const auto &[k, c] : comp.terms()) {
                        for (const auto &[b, z] : detail::split_by_phase(c, s.theta().rational())) {
                            terms.push_back(term_json(k, z, true, b));
                        }
                    }
                    blocks.push_back({{"deg", d}, {"terms", terms}});
                }
            }
            doc["blocks"] = blocks;
        },
        sigma);
    return doc.dump(indent);
}

AnySymbol parse_json_symbol(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw parse_error(parse_error_kind::syntax, std::string("invalid JSON: ") + e.what(), 0, e.byte);
    }
    if (!doc.is_object()) {
        fail(parse_error_kind::structure, "symbol JSON must be an object");
    }
    for (const char *key : {"dim", "order", "floor"}) {
        if (!doc.contains(key) || !doc[key].is_number_integer()) {
            fail(parse_error_kind::structure, std::string("missing integer field '") + key + "'");
        }
    }
    const int dim = doc["dim"].get<int>();
    const int order = doc["order"].get<int>();
    const int floor = doc["floor"].get<int>();
    if (dim < 2 || dim > 8) {
        fail(parse_error_kind::structure, "dimension must be between 2 and 8");
    }
    const json blocks = doc.value("blocks", json::array());
    if (!blocks.is_array()) {
        fail(parse_error_kind::structure, "'blocks' must be an array");
    }

    bool any_mode = false, any_nc = false, any_term = false;
    for (const auto &b : blocks) {
        for (const auto &t : b.value("terms", json::array())) {
            any_term = true;
            any_mode = any_mode || t.contains("mode");
            any_nc = any_nc || t.contains("nc");
        }
    }
    if (any_mode && any_nc) {
        fail(parse_error_kind::mixed_generators, "terms mix 'mode' and 'nc'");
    }
    const bool has_theta = doc.contains("theta");
    if (has_theta && !any_nc && any_term) {
        fail(parse_error_kind::theta_without_generators, "theta given but no term uses 'nc'");
    }
    const bool nc = has_theta || any_nc;
    if (nc && dim != 2) {
        fail(parse_error_kind::structure, "noncommutative symbols require dim 2");
    }
    const ThetaParameter theta = ThetaParameter::exact(has_theta ? rational_from(doc["theta"], "theta") : Rational(0));

    ClassicalSymbolT<CyclotomicScalar> s(dim, order, floor);
    std::set<int> seen;
    for (const auto &b : blocks) {
        if (!b.is_object() || !b.contains("deg") || !b["deg"].is_number_integer()) {
            fail(parse_error_kind::structure, "each block needs an integer 'deg'");
        }
        const int d = b["deg"].get<int>();
        if (!seen.insert(d).second) {
            fail(parse_error_kind::structure, "duplicate block for degree " + std::to_string(d));
        }
        if (d > order || d < floor) {
            fail(parse_error_kind::structure, "block degree " + std::to_string(d) + " outside [floor, order]");
        }
        TermMap<CyclotomicScalar> terms;
        for (const auto &t : b.value("terms", json::array())) {
            if (!t.contains("coeff") || !t.contains("alpha") || !t.contains("npow") || !t["npow"].is_number_integer()) {
                fail(parse_error_kind::structure, "terms need 'coeff', 'alpha' and 'npow'");
            }
            const json &cj = t["coeff"];
            const ComplexRational coeff(rational_from(cj.value("re", json(0)), "coeff.re"),
                                        rational_from(cj.value("im", json(0)), "coeff.im"));
            TermKey k;
            k.alpha = index_from(t["alpha"], "alpha", static_cast<std::size_t>(dim));
            for (int a : k.alpha) {
                if (a < 0) {
                    fail(parse_error_kind::structure, "alpha entries must be nonnegative");
                }
            }
            k.npow = t["npow"].get<int>();
            if (t.contains("nc")) {
                k.mode = index_from(t["nc"], "nc", 2);
            } else if (t.contains("mode")) {
                k.mode = index_from(t["mode"], "mode", static_cast<std::size_t>(dim));
            } else {
                k.mode = MultiIndex(static_cast<std::size_t>(dim), 0);
            }
            if (k.homogeneity() != d) {
                fail(parse_error_kind::homogeneity, "block declared degree " + std::to_string(d)
                                                        + " contains a term of degree " + std::to_string(k.homogeneity()));
            }
            CyclotomicScalar c(coeff);
            if (t.contains("phase")) {
                if (!nc || !t["phase"].is_number_integer()) {
                    fail(parse_error_kind::structure, "'phase' needs an integer and a noncommutative symbol");
                }
                c *= nc_phase<CyclotomicScalar>::eval(theta, t["phase"].get<long>());
            }
            detail::accumulate(terms, k, c);
        }
        s.set_component(HomogeneousComponentT<CyclotomicScalar>(dim, d, terms));
    }

    if (nc) {
        return NCSymbol(theta, std::move(s));
    }
    ClassicalSymbol out(dim, order, floor);
    for (const auto &[d, comp] : s.components()) {
        TermMap<ComplexRational> t;
        for (const auto &[k, c] : comp.terms()) {
            t.emplace(k, c.as_complex_rational());
        }
        out.set_component(HomogeneousComponent(dim, d, t));
    }
    return out;
}

} // namespace ncres

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <ncres/dsl.hpp>
#include <ncres/random_symbol.hpp>
#include <ncres/residue_calculus.hpp>

using namespace ncres;
using nlohmann::json;

namespace
{

enum exit_code {
    ok = 0,
    parse_failure = 1,
    invalid = 2,
    too_shallow = 3,
    check_failed = 4,
};

// Raised when a property check finds a counterexample.
struct check_failure {
    std::string message;
};

bool g_json = false;

std::string read_input(const std::string &path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ClassicalSymbol read_classical(const std::string &path)
{
    auto s = parse_symbol_auto(read_input(path));
    if (auto *c = std::get_if<ClassicalSymbol>(&s)) {
        return std::move(*c);
    }
    throw validation_error("expected a commutative symbol (no U/V, no theta)");
}

NCSymbol read_nc(const std::string &path)
{
    auto s = parse_symbol_auto(read_input(path));
    if (auto *c = std::get_if<NCSymbol>(&s)) {
        return std::move(*c);
    }
    throw validation_error("expected a noncommutative symbol (U/V generators)");
}

json rational_json(const Rational &q)
{
    return to_string(q);
}

json complex_json(const ComplexRational &z)
{
    return {{"re", rational_json(z.re())}, {"im", rational_json(z.im())}};
}

json residue_json(const ResidueValue &v)
{
    return {{"value", to_string(v)}, {"coeff", complex_json(v.coeff())}, {"pi_exponent", rational_json(v.pi_exponent())}};
}

void emit_symbol(const AnySymbol &s)
{
    if (g_json) {
        std::cout << to_json(s, 2) << "\n";
    } else {
        std::cout << format_symbol(s) << "\n";
    }
}

// Body of a single component as it appears inside "deg d { ... }".
std::string component_body(const HomogeneousComponent &c)
{
    if (c.is_zero()) {
        return "0";
    }
    ClassicalSymbol s(c.dim(), c.degree(), c.degree());
    s.set_component(c);
    const std::string text = format_symbol(s);
    const auto open = text.find("{ ");
    const auto close = text.rfind(" }");
    return text.substr(open + 2, close - open - 2);
}

HomogeneousComponent as_component(const TrigPolynomial &r)
{
    TermMap<ComplexRational> t;
    for (const auto &[mode, c] : r.coeffs()) {
        t.emplace(TermKey{mode, MultiIndex(mode.size(), 0), 0}, c);
    }
    return HomogeneousComponent(r.dim(), 0, t);
}

std::string squeeze(const std::string &s)
{
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out += c;
        }
    }
    return out;
}

// --expect: the printed value must match (whitespace-insensitive).
int compare_expected(const std::string &value, const std::string &expected)
{
    if (expected.empty() || squeeze(value) == squeeze(expected)) {
        return ok;
    }
    throw check_failure{"expected " + expected + ", got " + value};
}

int cmd_residue(const std::string &path, const std::string &expected)
{
    const auto v = residue(read_classical(path));
    if (g_json) {
        std::cout << residue_json(v).dump(2) << "\n";
    } else {
        std::cout << to_string(v) << "\n";
    }
    return compare_expected(to_string(v), expected);
}

int cmd_nc_residue(const std::string &path, const std::string &expected)
{
    const auto sigma = read_nc(path);
    const auto r = nc_residue(sigma);
    if (g_json) {
        json j{{"value", to_string(r)}, {"theta", to_string(sigma.theta())}};
        if (r.pi_coefficient.is_complex_rational()) {
            j["coeff"] = complex_json(r.pi_coefficient.as_complex_rational());
            j["pi_exponent"] = "1";
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(r) << "\n";
    }
    return compare_expected(to_string(r), expected);
}

int cmd_trace_check(int trials, std::uint64_t seed, int dim)
{
    if (trials < 1 || dim < 2 || dim > 6) {
        throw validation_error("trace-check needs trials >= 1 and dim in [2, 6]");
    }
    json failures = json::array();
    for (int t = 0; t < trials; ++t) {
        const auto [a, b] = random_residue_pair(seed + static_cast<std::uint64_t>(t), dim);
        const auto d = trace_defect(a, b);
        if (!d.is_zero()) {
            failures.push_back({{"trial", t}, {"defect", to_string(d)}});
        }
    }
    const int passed = trials - static_cast<int>(failures.size());
    if (g_json) {
        std::cout << json{{"dim", dim}, {"seed", seed}, {"trials", trials}, {"passed", passed}, {"failures", failures}}.dump(2)
                  << "\n";
    } else {
        for (const auto &f : failures) {
            std::cout << "trial " << f["trial"].get<int>() << ": defect " << f["defect"].get<std::string>() << "\n";
        }
        std::cout << "trace-check dim " << dim << " seed " << seed << ": " << passed << "/" << trials
                  << " trials with zero defect\n";
    }
    return failures.empty() ? ok : check_failed;
}

int cmd_nc_trace_check(const std::string &theta_text, int trials, std::uint64_t seed)
{
    if (trials < 1) {
        throw validation_error("nc-trace-check needs trials >= 1");
    }
    const Rational theta = parse_rational(theta_text);
    json failures = json::array();
    for (int t = 0; t < trials; ++t) {
        const auto [a, b] = random_nc_residue_pair(seed + static_cast<std::uint64_t>(t), theta);
        const auto d = nc_residue_defect(a, b);
        if (!d.pi_coefficient.is_zero()) {
            failures.push_back({{"trial", t}, {"defect", to_string(d)}});
        }
    }
    const int passed = trials - static_cast<int>(failures.size());
    if (g_json) {
        std::cout << json{{"theta", to_string(theta)}, {"seed", seed}, {"trials", trials}, {"passed", passed},
                          {"failures", failures}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto &f : failures) {
            std::cout << "trial " << f["trial"].get<int>() << ": defect " << f["defect"].get<std::string>() << "\n";
        }
        std::cout << "nc-trace-check theta " << to_string(theta) << " seed " << seed << ": " << passed << "/" << trials
                  << " trials with zero defect\n";
    }
    return failures.empty() ? ok : check_failed;
}

int cmd_decompose(const std::string &path)
{
    const auto sigma = read_classical(path);
    const auto cert = uniqueness_decompose(sigma);
    if (!verify_certificate(sigma, cert)) {
        throw check_failure{"decomposition certificate failed verification"};
    }
    const int n = sigma.dim();
    // Res = (2 pi)^n |S^{n-1}| r_0
    const auto res = torus_volume(n) * sphere_measure(n);
    const auto r0 = PiGradedScalar(cert.sphere_mean.coeff(MultiIndex(static_cast<std::size_t>(n), 0)), 0);
    const auto predicted = r0 * res;
    if (g_json) {
        json families = json::array();
        for (const auto &[d, hs] : cert.antiderivative_families) {
            json list = json::array();
            for (const auto &h : hs) {
                list.push_back(component_body(h));
            }
            families.push_back({{"deg", d}, {"h", list}});
        }
        std::cout << json{{"dim", n},
                          {"families", families},
                          {"sphere_mean", component_body(as_component(cert.sphere_mean))},
                          {"remainder", component_body(cert.remainder)},
                          {"residue", residue_json(predicted)}}
                         .dump(2)
                  << "\n";
        return ok;
    }
    std::cout << "dim " << n << "\n";
    for (const auto &[d, hs] : cert.antiderivative_families) {
        for (std::size_t l = 0; l < hs.size(); ++l) {
            std::cout << "family deg " << d << " h" << l + 1 << " { " << component_body(hs[l]) << " }\n";
        }
    }
    std::cout << "sphere_mean { " << component_body(as_component(cert.sphere_mean)) << " }\n";
    std::cout << "remainder deg " << -n << " { " << component_body(cert.remainder) << " }\n";
    std::cout << "residue " << to_string(predicted) << "\n";
    return ok;
}

int cmd_commutator(const std::string &path, const std::string &with, int dir, int depth)
{
    const auto sigma = read_classical(path);
    if (dir < 1 || dir > sigma.dim()) {
        throw validation_error("--dir must lie in [1, " + std::to_string(sigma.dim()) + "]");
    }
    if (with == "xi") {
        emit_symbol(commutator_xi(sigma, dir - 1));
        return ok;
    }
    if (depth < 0) {
        depth = sigma.order() - sigma.trusted_floor() + 1;
    }
    emit_symbol(commutator_exp(sigma, dir - 1, depth));
    return ok;
}

int cmd_apply(const std::string &path, const std::string &element)
{
    const auto sigma = read_nc(path);
    const auto a = parse_nc_element(element, sigma.theta());
    const auto r = nc_apply(sigma, a);
    if (g_json) {
        json terms = json::array();
        for (const auto &[mn, c] : r.coeffs()) {
            terms.push_back({{"nc", {mn.first, mn.second}}, {"re", c.real()}, {"im", c.imag()}});
        }
        std::cout << json{{"theta", to_string(sigma.theta())}, {"terms", terms}}.dump(2) << "\n";
        return ok;
    }
    if (r.coeffs().empty()) {
        std::cout << "0\n";
    }
    for (const auto &[mn, c] : r.coeffs()) {
        std::printf("(%.17g, %.17g) * U^%d * V^%d\n", c.real(), c.imag(), mn.first, mn.second);
    }
    return ok;
}

int cmd_semiclassical(const std::string &path)
{
    const auto rep = semiclassical_check(read_nc(path));
    if (g_json) {
        std::cout << json{{"lhs", residue_json(rep.lhs)}, {"rhs", residue_json(rep.rhs)}, {"equal", rep.equal}}.dump(2)
                  << "\n";
    } else {
        std::cout << "lhs " << to_string(rep.lhs) << "\nrhs " << to_string(rep.rhs) << "\n"
                  << (rep.equal ? "equal" : "NOT equal") << "\n";
    }
    return rep.equal ? ok : check_failed;
}

int run(int argc, char **argv)
{
    CLI::App app{"Exact symbol calculus and noncommutative residues on tori"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "Structured JSON output");

    std::string in, in2, with = "xi", theta_text, element, expected;
    int trials = 100, dim = 2, dir = 1, depth = -1;
    std::uint64_t seed = 1;
    RandomSymbolParams rp;
    std::string random_theta;

    auto *residue_cmd = app.add_subcommand("residue", "Noncommutative residue of a symbol on T^n");
    residue_cmd->add_option("input", in, "Symbol file (default: stdin)");
    residue_cmd->add_option("--expect", expected, "Exit with 4 unless the residue equals this value");

    auto *compose_cmd = app.add_subcommand("compose", "Symbol of the operator product");
    compose_cmd->add_option("left", in, "Left symbol")->required();
    compose_cmd->add_option("right", in2, "Right symbol")->required();

    auto *nc_residue_cmd = app.add_subcommand("nc-residue", "Residue of a symbol on the noncommutative two-torus");
    nc_residue_cmd->add_option("input", in, "Symbol file (default: stdin)");
    nc_residue_cmd->add_option("--expect", expected, "Exit with 4 unless the residue equals this value");

    auto *nc_compose_cmd = app.add_subcommand("nc-compose", "Noncommutative symbol product");
    nc_compose_cmd->add_option("left", in, "Left symbol")->required();
    nc_compose_cmd->add_option("right", in2, "Right symbol")->required();

    auto *trace_cmd = app.add_subcommand("trace-check", "Res(a o b) = Res(b o a) on random pairs");
    trace_cmd->add_option("--trials", trials)->capture_default_str();
    trace_cmd->add_option("--seed", seed)->capture_default_str();
    trace_cmd->add_option("--dim", dim)->capture_default_str();

    auto *nc_trace_cmd = app.add_subcommand("nc-trace-check", "Trace property of the NC residue on random pairs");
    nc_trace_cmd->add_option("--theta", theta_text, "Rational theta p/q")->required();
    nc_trace_cmd->add_option("--trials", trials)->capture_default_str();
    nc_trace_cmd->add_option("--seed", seed)->capture_default_str();

    auto *decompose_cmd = app.add_subcommand("decompose", "Euler antiderivatives, sphere mean and remainder");
    decompose_cmd->add_option("input", in, "Symbol file (default: stdin)");

    auto *comm_cmd = app.add_subcommand("commutator", "Symbol of [T_xi, T_sigma] or [T_sigma, T_exp]");
    comm_cmd->add_option("input", in, "Symbol file (default: stdin)");
    comm_cmd->add_option("--with", with)->check(CLI::IsMember({"xi", "exp"}))->capture_default_str();
    comm_cmd->add_option("--dir", dir, "Direction, 1-based")->required();
    comm_cmd->add_option("--depth", depth, "Series depth for --with exp (default: down to the floor)");

    auto *apply_cmd = app.add_subcommand("apply", "Lattice evaluation of T_{sigma,theta} on an element of A_theta");
    apply_cmd->add_option("input", in, "Symbol file (default: stdin)");
    apply_cmd->add_option("--element", element, "Element, e.g. \"1 + U*V\"")->required();

    auto *semi_cmd = app.add_subcommand("semiclassical-check", "Compare both residues of a theta = 0 symbol");
    semi_cmd->add_option("input", in, "Symbol file (default: stdin)");

    auto *format_cmd = app.add_subcommand("format", "Canonical rendering of a symbol");
    format_cmd->add_option("input", in, "Symbol file (default: stdin)");

    auto *random_cmd = app.add_subcommand("random", "Seeded random symbol");
    random_cmd->add_option("--seed", seed)->capture_default_str();
    random_cmd->add_option("--dim", rp.dim)->capture_default_str();
    random_cmd->add_option("--order", rp.order)->capture_default_str();
    random_cmd->add_option("--depth", rp.depth)->capture_default_str();
    random_cmd->add_option("--max-mode", rp.max_mode)->capture_default_str();
    random_cmd->add_option("--max-alpha", rp.max_alpha)->capture_default_str();
    random_cmd->add_option("--max-terms", rp.max_terms)->capture_default_str();
    random_cmd->add_option("--theta", random_theta, "Rational theta; produces a noncommutative symbol");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : invalid;
    }

    if (residue_cmd->parsed()) {
        return cmd_residue(in, expected);
    }
    if (compose_cmd->parsed()) {
        emit_symbol(compose(read_classical(in), read_classical(in2)));
        return ok;
    }
    if (nc_residue_cmd->parsed()) {
        return cmd_nc_residue(in, expected);
    }
    if (nc_compose_cmd->parsed()) {
        emit_symbol(nc_compose(read_nc(in), read_nc(in2)));
        return ok;
    }
    if (trace_cmd->parsed()) {
        return cmd_trace_check(trials, seed, dim);
    }
    if (nc_trace_cmd->parsed()) {
        return cmd_nc_trace_check(theta_text, trials, seed);
    }
    if (decompose_cmd->parsed()) {
        return cmd_decompose(in);
    }
    if (comm_cmd->parsed()) {
        return cmd_commutator(in, with, dir, depth);
    }
    if (apply_cmd->parsed()) {
        return cmd_apply(in, element);
    }
    if (semi_cmd->parsed()) {
        return cmd_semiclassical(in);
    }
    if (format_cmd->parsed()) {
        emit_symbol(parse_symbol_auto(read_input(in)));
        return ok;
    }
    if (random_cmd->parsed()) {
        if (!random_theta.empty()) {
            rp.theta = parse_rational(random_theta);
        }
        emit_symbol(random_symbol(seed, rp));
        return ok;
    }
    return invalid;
}

} // namespace

int main(int argc, char **argv)
{
    try {
        return run(argc, argv);
    } catch (const parse_error &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_failure;
    } catch (const insufficient_expansion_error &e) {
        std::cerr << "insufficient expansion: " << e.what() << "\n";
        return too_shallow;
    } catch (const check_failure &e) {
        std::cerr << "check failed: " << e.message << "\n";
        return check_failed;
    } catch (const validation_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    } catch (const std::domain_error &e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return invalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    }
}

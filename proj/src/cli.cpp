#include "stanley/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stanley/collapse.hpp"
#include "stanley/combinatorics.hpp"
#include "stanley/complexes.hpp"
#include "stanley/errors.hpp"
#include "stanley/io.hpp"
#include "stanley/probes.hpp"
#include "stanley/sdepth.hpp"

namespace stanley::cli {

namespace {

struct Settings {
    std::string format = "text";
    u64 budget = SolverOptions{}.node_budget;
    bool verbose = false;
};

class Context {
public:
    Context(const Settings& settings, std::istream& in, std::ostream& out, std::ostream& err)
        : settings_(settings), in_(in), out_(out), err_(err)
    {
    }

    bool machine() const { return settings_.format == "machine"; }
    bool verbose() const { return settings_.verbose; }
    SolverOptions solver() const { return {settings_.budget}; }
    std::ostream& out() { return out_; }
    std::ostream& err() { return err_; }

    ParsedInput load(const std::string& path)
    {
        if (path == "-")
            return parse_input(in_);
        std::ifstream file(path);
        if (!file)
            throw InvalidArgument("cannot open '" + path + "'");
        return parse_input(file);
    }

    MonomialIdeal load_ideal(const std::string& path)
    {
        ParsedInput p = load(path);
        if (p.kind == InputKind::Complex)
            return complement_ideal(SimplicialComplex::from_faces(p.n, std::move(p.sets)));
        return normalize_ideal(std::move(p.sets), p.n);
    }

    SimplicialComplex load_complex(const std::string& path, bool require_ideal = false)
    {
        ParsedInput p = load(path);
        if (p.kind == InputKind::Ideal)
            return complement_complex(normalize_ideal(std::move(p.sets), p.n));
        if (require_ideal)
            throw InvalidArgument("--ideal given but '" + path + "' holds a complex");
        return SimplicialComplex::from_faces(p.n, std::move(p.sets));
    }

    Certificate load_certificate(const std::string& path)
    {
        if (path == "-")
            return parse_certificate(in_);
        std::ifstream file(path);
        if (!file)
            throw InvalidArgument("cannot open '" + path + "'");
        return parse_certificate(file);
    }

private:
    const Settings& settings_;
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
};

std::string join(const std::vector<u64>& values, const char* sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? sep : "") << values[i];
    return os.str();
}

const char* branch_name(BoundBranch b)
{
    return b == BoundBranch::Xi ? "xi" : "binom";
}

const char* order_name(std::strong_ordering o)
{
    if (o < 0)
        return "less";
    if (o > 0)
        return "greater";
    return "equal";
}

unsigned narrow(u64 v, const char* what)
{
    if (v > 64)
        throw InvalidArgument(std::string(what) + " must be at most 64");
    return static_cast<unsigned>(v);
}

int cmd_sdepth(Context& ctx, const std::string& path)
{
    MonomialIdeal ideal = ctx.load_ideal(path);
    if (ctx.verbose())
        ctx.err() << "ideal on " << ideal.n() << " variables, " << ideal.num_generators() << " generators\n";
    StanleyDepthResult r = stanley_depth(ideal, ctx.solver());
    if (ctx.machine()) {
        Record rec;
        rec.add("n", ideal.n());
        rec.add("generators", ideal.num_generators());
        rec.add("min_degree", ideal.min_degree());
        rec.add("sdepth", r.value);
        add_partition(rec, "witness", r.witness);
        rec.write(ctx.out());
    } else {
        ctx.out() << r.value << '\n';
        write_partition(ctx.out(), r.witness);
    }
    return kTrue;
}

int cmd_collapsible(Context& ctx, const std::string& path, bool as_ideal)
{
    SimplicialComplex complex = ctx.load_complex(path, as_ideal);
    CollapseResult r = is_uniformly_collapsible(complex);
    if (ctx.machine()) {
        FacetRidgeGraph g = build_facet_ridge_graph(complex);
        Record rec;
        rec.add("n", complex.n());
        rec.add("delta", g.delta);
        rec.add("facets", g.facets.size());
        rec.add("ridges", g.ridges.size());
        rec.add("collapsible", r.collapsible);
        add_certificate(rec, "certificate", r.certificate);
        rec.write(ctx.out());
    } else {
        ctx.out() << "collapsible: " << (r.collapsible ? "true" : "false") << '\n';
        write_certificate(ctx.out(), r.certificate);
    }
    return r.collapsible ? kTrue : kFalse;
}

int cmd_verify_theorem(Context& ctx, const std::string& path)
{
    MonomialIdeal ideal = ctx.load_ideal(path);
    MainTheoremReport r = verify_main_theorem(ideal);
    if (ctx.machine()) {
        Record rec;
        rec.add("n", r.n);
        rec.add("d", r.d);
        rec.add("mu_d", r.mu_d);
        rec.add("bound", r.bound);
        rec.add("bound_branch", r.branch ? branch_name(*r.branch) : "none");
        rec.add("small_case", r.small_case);
        rec.add("hypothesis_met", r.hypothesis_met);
        rec.add("collapsible", r.collapsible);
        rec.add("certificate_valid", r.certificate_valid);
        rec.add("consistent", r.consistent());
        add_certificate(rec, "certificate", r.certificate);
        rec.write(ctx.out());
    } else {
        auto& out = ctx.out();
        out << "n = " << r.n << ", d = " << r.d << '\n';
        out << "mu_d = " << r.mu_d << ", bound = " << r.bound;
        if (r.branch)
            out << " (" << branch_name(*r.branch) << ")";
        out << '\n';
        out << "hypothesis: " << (r.hypothesis_met ? "met" : "not met") << '\n';
        out << "sdepth >= d+1: " << (r.collapsible ? "yes" : "no") << '\n';
        out << "certificate: " << (r.certificate_valid ? "valid" : "INVALID") << '\n';
        out << "consistent: " << (r.consistent() ? "yes" : "NO") << '\n';
        write_certificate(out, r.certificate);
    }
    return (r.consistent() && r.certificate_valid) ? kTrue : kFalse;
}

int cmd_macaulay(Context& ctx, u64 x, u64 k_raw, const std::optional<u64>& compare_to)
{
    const unsigned k = narrow(k_raw, "k");
    MacaulayRep rep = macaulay_rep(x, k);
    const u64 shadow = shadow_size(x, k);
    std::optional<std::strong_ordering> order;
    if (compare_to)
        order = compare_by_macaulay(x, *compare_to, k);

    if (ctx.machine()) {
        Record rec;
        rec.add("x", x);
        rec.add("k", k);
        rec.add("coefficients", join(rep.coeffs(), " "));
        rec.add("lowest", rep.lowest());
        rec.add("shadow", shadow);
        if (order) {
            rec.add("compare.y", *compare_to);
            rec.add("compare.order", order_name(*order));
        }
        rec.write(ctx.out());
        return kTrue;
    }
    auto& out = ctx.out();
    out << x << " =";
    for (unsigned j = k; j >= rep.lowest(); --j)
        out << (j == k ? " " : "+") << "C(" << rep.coeff(j) << "," << j << ")";
    out << "; shadow " << shadow << '\n';
    out << "coefficients " << join(rep.coeffs(), " ") << '\n';
    if (order)
        out << "compare " << x << " " << *compare_to << ": " << order_name(*order) << '\n';
    return kTrue;
}

int cmd_xi(Context& ctx, u64 delta)
{
    u64 value = xi(narrow(delta, "delta"));
    if (ctx.machine()) {
        Record rec;
        rec.add("delta", delta);
        rec.add("xi", value);
        rec.write(ctx.out());
    } else {
        ctx.out() << value << '\n';
    }
    return kTrue;
}

int cmd_bound(Context& ctx, u64 n_raw, u64 d_raw)
{
    const unsigned n = narrow(n_raw, "n"), d = narrow(d_raw, "d");
    if (d < 1 || d >= n)
        throw InvalidArgument("bound: need 1 <= d < n");
    MinBound mb = min_bound(n, n - d);
    if (ctx.machine()) {
        Record rec;
        rec.add("n", n);
        rec.add("d", d);
        rec.add("binom", binomial(n, d + 1));
        try {
            rec.add("xi", xi(n - d));
        } catch (const Overflow&) {
            rec.add("xi", "overflow");
        }
        rec.add("bound", mb.value);
        rec.add("branch", branch_name(mb.which));
        rec.write(ctx.out());
    } else {
        ctx.out() << "min(C(" << n << "," << d + 1 << "), xi_" << n - d << ") = " << mb.value << " ("
                  << branch_name(mb.which) << ")\n";
    }
    return kTrue;
}

int cmd_gen(Context& ctx, const std::string& name, const std::vector<u64>& params, bool to_ideal, bool to_complex)
{
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw InvalidArgument("gen " + name + " takes " + std::to_string(count) + " parameters");
    };
    std::optional<MonomialIdeal> ideal;
    std::optional<SimplicialComplex> complex;
    if (name == "veronese") {
        need(2);
        ideal = gen_veronese(narrow(params[0], "n"), narrow(params[1], "d"));
    } else if (name == "compressed") {
        need(3);
        ideal = gen_compressed_ideal(narrow(params[0], "n"), narrow(params[1], "d"), params[2]);
    } else if (name == "not-uc") {
        need(2);
        complex = gen_not_uc(narrow(params[0], "n"), narrow(params[1], "delta"));
    } else if (name == "padded") {
        need(2);
        complex = gen_padded_counterexample(narrow(params[0], "n"), narrow(params[1], "delta"));
    } else if (name == "cycle-chord") {
        need(1);
        complex = gen_cycle_with_chord(narrow(params[0], "n"));
    } else {
        throw InvalidArgument("unknown generator '" + name + "'");
    }

    if (complex && to_ideal)
        ideal = complement_ideal(*complex), complex.reset();
    else if (ideal && to_complex)
        complex = complement_complex(*ideal), ideal.reset();

    if (ideal)
        write_ideal(ctx.out(), *ideal);
    else
        write_complex(ctx.out(), *complex);
    return kTrue;
}

int cmd_probe_conjecture(Context& ctx, u64 n, u64 d)
{
    ConjectureReport r = probe_conjecture(narrow(n, "n"), narrow(d, "d"), ctx.solver());
    if (ctx.machine()) {
        Record rec;
        rec.add("n", r.n);
        rec.add("d", r.d);
        rec.add("sdepth", r.exact);
        rec.add("conjectured_lower", r.conjectured_lower);
        rec.add("known_upper", *r.known_upper);
        rec.add("meets_lower", r.meets_lower);
        rec.add("meets_upper", r.exact <= *r.known_upper);
        rec.add("witness_valid", r.witness_valid);
        rec.write(ctx.out());
    } else {
        auto& out = ctx.out();
        out << "sdepth(I_{" << r.n << "," << r.d << "}) = " << r.exact << '\n';
        out << "conjectured lower bound = " << r.conjectured_lower << (r.meets_lower ? " (met)" : " (FAILS)") << '\n';
        out << "known upper bound = " << *r.known_upper << (r.exact <= *r.known_upper ? " (met)" : " (exceeded)")
            << '\n';
    }
    return kTrue;
}

int cmd_probe_star(Context& ctx, u64 n, u64 delta)
{
    StarProbeReport r = probe_star(narrow(n, "n"), narrow(delta, "delta"));
    if (ctx.machine()) {
        Record rec;
        rec.add("n", r.n);
        rec.add("delta", r.delta);
        rec.add("complexes", r.complexes);
        rec.add("hypothesis_holds", r.hypothesis_holds);
        rec.add("violations", r.violations);
        rec.add("property_holds", r.property_holds());
        if (r.first_violation)
            for (std::size_t i = 0; i < r.first_violation->num_facets(); ++i)
                rec.add("first_violation.facet." + std::to_string(i), format_set(r.first_violation->facets()[i]));
        rec.write(ctx.out());
    } else {
        auto& out = ctx.out();
        out << "pure complexes of dimension " << r.delta - 1 << " on [" << r.n << "]: " << r.complexes << '\n';
        out << "with f_{delta-1} <= f_{delta-2}: " << r.hypothesis_holds << '\n';
        out << "not uniformly collapsible among them: " << r.violations << '\n';
        if (r.first_violation)
            write_complex(out, *r.first_violation);
    }
    return kTrue;
}

int cmd_probe_xi_min(Context& ctx, u64 n, u64 d)
{
    XiMinProbeReport r = probe_xi_min(narrow(n, "n"), narrow(d, "d"));
    if (ctx.machine()) {
        Record rec;
        rec.add("n", r.n);
        rec.add("d", r.d);
        rec.add("ideals", r.ideals);
        rec.add("minimal", r.minimal);
        if (r.min_mu)
            rec.add("min_mu", *r.min_mu);
        if (r.max_mu)
            rec.add("max_mu", *r.max_mu);
        rec.add("lower_bound", r.lower_bound);
        rec.add("below_lower_bound", r.below_lower_bound);
        if (r.max_example)
            for (std::size_t i = 0; i < r.max_example->num_generators(); ++i)
                rec.add("max_example.generator." + std::to_string(i),
                        format_monomial(r.max_example->generators()[i]));
        rec.write(ctx.out());
    } else {
        auto& out = ctx.out();
        out << "pure degree-" << r.d << " ideals on " << r.n << " variables: " << r.ideals << '\n';
        out << "minimal with sdepth = d: " << r.minimal << '\n';
        if (r.max_mu)
            out << "mu range: " << *r.min_mu << " .. " << *r.max_mu << '\n';
        out << "lower bound xi + 1 = " << r.lower_bound << ", below it: " << r.below_lower_bound << '\n';
        if (r.max_example)
            write_ideal(out, *r.max_example);
    }
    return kTrue;
}

int cmd_fvector(Context& ctx, const std::string& path)
{
    SimplicialComplex complex = ctx.load_complex(path);
    FVector f = f_vector(complex);
    if (ctx.machine()) {
        Record rec;
        rec.add("n", complex.n());
        rec.add("dimension", f.dimension());
        rec.add("fvector", join(f.entries(), " "));
        rec.write(ctx.out());
    } else {
        ctx.out() << "f = (" << join(f.entries(), ", ") << ")\n";
    }
    return kTrue;
}

int cmd_check(Context& ctx, const std::string& path, const std::string& certificate_path)
{
    ParsedInput input = ctx.load(path);
    Certificate cert = ctx.load_certificate(certificate_path);
    bool valid = false;
    std::string kind;
    if (const auto* partition = std::get_if<IntervalPartition>(&cert)) {
        kind = "partition";
        MonomialIdeal ideal = input.kind == InputKind::Ideal
                                  ? normalize_ideal(std::move(input.sets), input.n)
                                  : complement_ideal(SimplicialComplex::from_faces(input.n, std::move(input.sets)));
        if (partition->cap >= ideal.min_degree() && partition->cap <= ideal.n())
            valid = verify_partition(build_reduced_poset(ideal, partition->cap), *partition);
    } else {
        const auto& collapse = std::get<CollapseCertificate>(cert);
        kind = std::holds_alternative<Sdr>(collapse) ? "sdr" : "violator";
        SimplicialComplex complex =
            input.kind == InputKind::Complex
                ? SimplicialComplex::from_faces(input.n, std::move(input.sets))
                : complement_complex(normalize_ideal(std::move(input.sets), input.n));
        valid = verify_certificate(complex, collapse);
    }
    if (ctx.machine()) {
        Record rec;
        rec.add("kind", kind);
        rec.add("valid", valid);
        rec.write(ctx.out());
    } else {
        ctx.out() << kind << ": " << (valid ? "valid" : "invalid") << '\n';
    }
    return valid ? kTrue : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Stanley depth of squarefree monomial ideals: exact solver, collapsibility and verifiers", "sdepth"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Settings settings;
    app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--budget", settings.budget, "Node budget for the partition search");
    app.add_flag("-v,--verbose", settings.verbose, "Diagnostics on stderr");

    std::string path, second_path, gen_name;
    u64 a = 0, b = 0;
    std::optional<u64> compare_to;
    std::vector<u64> params;
    bool as_ideal = false, to_ideal = false, to_complex = false;

    auto* sdepth = app.add_subcommand("sdepth", "Exact Stanley depth with an interval-partition witness");
    sdepth->add_option("file", path, "Ideal or complex file, - for stdin")->required();

    auto* collapsible = app.add_subcommand("collapsible", "Uniform collapsibility with a certificate");
    collapsible->add_option("file", path, "Complex file (ideal files use the complement complex)")->required();
    collapsible->add_flag("--ideal", as_ideal, "Require an ideal file and test its complement complex");

    auto* theorem = app.add_subcommand("verify-theorem", "Check the generator-count criterion on an ideal");
    theorem->add_option("file", path)->required();

    auto* macaulay = app.add_subcommand("macaulay", "Macaulay representation and shadow size");
    macaulay->add_option("x", a)->required()->check(CLI::PositiveNumber);
    macaulay->add_option("k", b)->required()->check(CLI::PositiveNumber);
    macaulay->add_option("--compare", compare_to, "Compare x with this value by coefficients")
        ->check(CLI::PositiveNumber);

    auto* xi_cmd = app.add_subcommand("xi", "Threshold xi_delta");
    xi_cmd->add_option("delta", a)->required()->check(CLI::PositiveNumber);

    auto* bound = app.add_subcommand("bound", "min(C(n,d+1), xi_{n-d})");
    bound->add_option("n", a)->required();
    bound->add_option("d", b)->required();

    auto* gen = app.add_subcommand("gen", "Emit a named family: veronese, compressed, not-uc, padded, cycle-chord");
    gen->add_option("name", gen_name)->required();
    gen->add_option("params", params)->required();
    gen->add_flag("--ideal", to_ideal, "Emit the complement ideal of a complex");
    gen->add_flag("--complex", to_complex, "Emit the complement complex of an ideal");

    auto* probe_conj = app.add_subcommand("probe-conjecture", "Exact sdepth of I_{n,d} against the conjectured bound");
    probe_conj->add_option("n", a)->required();
    probe_conj->add_option("d", b)->required();

    auto* probe_star_cmd = app.add_subcommand("probe-star", "Search for complexes with f_{delta-1} <= f_{delta-2} that do not collapse");
    probe_star_cmd->add_option("n", a)->required();
    probe_star_cmd->add_option("delta", b)->required();

    auto* probe_xi = app.add_subcommand("probe-xi-min", "Generator counts of minimal ideals with sdepth = d");
    probe_xi->add_option("n", a)->required();
    probe_xi->add_option("d", b)->required();

    auto* fvector = app.add_subcommand("fvector", "f-vector of a complex");
    fvector->add_option("file", path)->required();

    auto* check = app.add_subcommand("check", "Verify an SDR, violator or partition certificate");
    check->add_option("file", path)->required();
    check->add_option("certificate", second_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kTrue;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kTrue;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    Context ctx(settings, in, out, err);
    try {
        if (app.got_subcommand(sdepth))
            return cmd_sdepth(ctx, path);
        if (app.got_subcommand(collapsible))
            return cmd_collapsible(ctx, path, as_ideal);
        if (app.got_subcommand(theorem))
            return cmd_verify_theorem(ctx, path);
        if (app.got_subcommand(macaulay))
            return cmd_macaulay(ctx, a, b, compare_to);
        if (app.got_subcommand(xi_cmd))
            return cmd_xi(ctx, a);
        if (app.got_subcommand(bound))
            return cmd_bound(ctx, a, b);
        if (app.got_subcommand(gen))
            return cmd_gen(ctx, gen_name, params, to_ideal, to_complex);
        if (app.got_subcommand(probe_conj))
            return cmd_probe_conjecture(ctx, a, b);
        if (app.got_subcommand(probe_star_cmd))
            return cmd_probe_star(ctx, a, b);
        if (app.got_subcommand(probe_xi))
            return cmd_probe_xi_min(ctx, a, b);
        if (app.got_subcommand(fvector))
            return cmd_fvector(ctx, path);
        if (app.got_subcommand(check))
            return cmd_check(ctx, path, second_path);
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace stanley::cli

#include "resint/commands.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "resint/invariants.hpp"
#include "resint/io.hpp"
#include "resint/jets.hpp"
#include "resint/residual.hpp"

namespace resint::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Args {
    std::string command;
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;

    bool has(const std::string& name) const { return flags.count(name) > 0; }
    std::string get(const std::string& name, const std::string& dflt) const {
        auto it = flags.find(name);
        return it == flags.end() ? dflt : it->second;
    }
    long get_long(const std::string& name, long dflt) const {
        auto it = flags.find(name);
        if (it == flags.end()) return dflt;
        try {
            return std::stol(it->second);
        } catch (...) {
            throw input_error("flag --" + name + " expects an integer");
        }
    }
    std::uint64_t get_u64(const std::string& name, std::uint64_t dflt) const {
        auto it = flags.find(name);
        if (it == flags.end()) return dflt;
        try {
            return std::stoull(it->second);
        } catch (...) {
            throw input_error("flag --" + name + " expects a nonnegative integer");
        }
    }
    Rat get_rat(const std::string& name, const Rat& dflt) const {
        auto it = flags.find(name);
        return it == flags.end() ? dflt : Rat::parse(it->second);
    }
    const std::string& pos(std::size_t i, const char* what) const {
        if (i >= positional.size())
            throw input_error(std::string("missing argument: ") + what);
        return positional[i];
    }
};

const std::set<std::string> kBoolFlags = {"rationals"};

Args parse_args(const std::vector<std::string>& argv) {
    if (argv.empty()) throw input_error("no command given; try 'help'");
    Args a;
    a.command = argv[0];
    for (std::size_t i = 1; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        if (s.rfind("--", 0) == 0) {
            const std::string name = s.substr(2);
            if (name.empty()) throw input_error("empty flag name");
            if (kBoolFlags.count(name)) {
                a.flags[name] = "1";
                continue;
            }
            if (i + 1 >= argv.size()) throw input_error("flag --" + name + " expects a value");
            a.flags[name] = argv[++i];
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json dim_json(const KrullDim& d) {
    if (d.empty) return json{{"empty", true}};
    return json{{"dim", d.dim}, {"codim", d.codim}};
}

template <class K>
json gens_json(const std::vector<Poly<K>>& gens) {
    return json(generator_texts(gens));
}

template <class K>
std::vector<Poly<K>> decl_polys(const ProblemSource& src, const std::string& name) {
    const auto& decl = src.get(name);
    std::vector<Poly<K>> out;
    for (const auto& ast : decl.polys) out.push_back(materialize<K>(ast, src.ring));
    return out;
}

template <class K>
Ideal<K> decl_ideal(const ProblemSource& src, const std::string& name) {
    return Ideal<K>(src.ring, decl_polys<K>(src, name));
}

template <class K>
GeneratorSystem<K> decl_system(const ProblemSource& src, const std::string& name,
                               Budget& budget) {
    return GeneratorSystem<K>::make(src.ring, decl_polys<K>(src, name), budget);
}

MonomialOrder order_flag(const Args& a) {
    const std::string name = a.get("order", "grevlex");
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw input_error("unknown order '" + name + "' (use lex or grevlex)");
}

template <class K>
json matrix_json(const CoefficientMatrix<K>& m) {
    json rows = json::array();
    for (int i = 0; i < m.t; ++i) {
        json row = json::array();
        for (int j = 0; j < m.r; ++j) row.push_back(coeff_text(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class K>
json residual_json(const ResidualRun<K>& run) {
    json out;
    out["t"] = run.t;
    out["empty"] = run.empty;
    out["valid"] = run.valid;
    out["stable"] = run.stable;
    out["saturation_exponent"] = run.saturation_exponent;
    if (!run.empty) {
        out["dimY"] = run.dimY.dim;
        out["codimY"] = run.dimY.codim;
    }
    out["matrix"] = matrix_json(run.matrix);
    out["IM"] = gens_json(run.ideal_m.gens());
    out["IH"] = gens_json(run.ideal_h.gens());
    out["IY"] = gens_json(run.ideal_y.gens());
    out["hu"] = json{{"ht_ok", run.hu.ht_ok},
                     {"agrees", run.hu.agrees},
                     {"J", gens_json(run.hu.colon_ideal.gens())}};
    json trials = json::array();
    for (const auto& tr : run.trials) {
        json t;
        t["seed"] = tr.seed;
        t["empty"] = tr.empty;
        t["dimY"] = dim_json(tr.dimY);
        trials.push_back(t);
    }
    out["trials"] = trials;
    return out;
}

json mld_json(const MldResult& r) {
    json out;
    if (r.minus_infinity) {
        out["mld"] = "-infinity";
    } else {
        out["mld"] = r.value.fraction_str();
        out["certified"] = r.certified;
        out["lower_bound"] = r.lower_bound.fraction_str();
    }
    out["box"] = r.box_bound;
    return out;
}

template <class K>
FormalProduct<K> parse_factors(const ProblemSource& src, const Args& args, std::size_t from) {
    std::vector<std::pair<Ideal<K>, Rat>> factors;
    for (std::size_t i = from; i < args.positional.size(); ++i) {
        const std::string& spec = args.positional[i];
        const auto caret = spec.find('^');
        const std::string name = spec.substr(0, caret);
        Rat expo(1);
        if (caret != std::string::npos) expo = Rat::parse(spec.substr(caret + 1));
        factors.emplace_back(decl_ideal<K>(src, name), expo);
    }
    return FormalProduct<K>::make(src.ring, std::move(factors));
}

std::uint64_t keep_mask_from_flag(const ProblemSource& src, const std::string& list) {
    std::uint64_t mask = 0;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const std::string name =
            comma == std::string::npos ? list.substr(start) : list.substr(start, comma - start);
        if (!name.empty()) {
            const int vi = src.ring->var_index(name);
            if (vi < 0) throw input_error("unknown variable '" + name + "' in --keep");
            mask |= std::uint64_t{1} << vi;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return mask;
}

/// Jet commands run over F_p (default 32003) unless the ring already is a
/// prime field or --rationals is given.
json run_jets_typed(const ProblemSource& src, const Args& args, Budget& budget, bool estimate) {
    const int level = static_cast<int>(args.get_long("level", estimate ? 3 : 1));
    const int cap = static_cast<int>(args.get_long("jet-vars", kDefaultJetVariableCap));
    const std::string name = args.pos(1, "ideal name");

    auto run = [&](auto ideal) -> json {
        if (estimate) {
            JetEstimate est = lct_jet_estimate(ideal, level, budget, cap);
            json levels = json::array();
            for (const auto& rep : est.levels) {
                levels.push_back(json{{"level", rep.level},
                                      {"jet_vars", rep.jet_vars},
                                      {"dim", dim_json(rep.dim)},
                                      {"normalized_codim", rep.normalized_codim.fraction_str()}});
            }
            return json{{"estimate", est.estimate.fraction_str()},
                        {"min_level", est.min_level},
                        {"complete", est.complete},
                        {"levels", levels}};
        }
        auto state = jet_ideal(ideal, level, budget, cap);
        return json{{"level", level},
                    {"ring", state.ring()->vars()},
                    {"generators", gens_json(state.gens())}};
    };

    if (src.ring->field().kind == FieldKind::PrimeField) return run(decl_ideal<Fp>(src, name));
    if (args.has("rationals")) return run(decl_ideal<Rat>(src, name));
    const std::int64_t p = args.get_long("p", kDefaultJetPrime);
    return run(to_prime_field(decl_ideal<Rat>(src, name), p));
}

template <class K>
json run_typed(const Args& args, const ProblemSource& src, Budget& budget,
               std::uint64_t& seed_out, bool& seed_used) {
    const std::string& cmd = args.command;
    const std::uint64_t seed = args.get_u64("seed", 1);
    const int trials = static_cast<int>(args.get_long("trials", 3));
    const std::int64_t bound = args.get_long("bound", 100);

    if (cmd == "gb") {
        auto gb = decl_ideal<K>(src, args.pos(1, "ideal name")).groebner(order_flag(args), budget);
        return json{{"basis", gens_json(gb->gens)},
                    {"order", args.get("order", "grevlex")}};
    }
    if (cmd == "dim") {
        return dim_json(decl_ideal<K>(src, args.pos(1, "ideal name")).dimension(budget));
    }
    if (cmd == "colon") {
        Ideal<K> I = decl_ideal<K>(src, args.pos(1, "ideal I"));
        Ideal<K> J = decl_ideal<K>(src, args.pos(2, "ideal J"));
        return json{{"generators", gens_json(colon(I, J, budget).gens())}};
    }
    if (cmd == "saturate") {
        Ideal<K> I = decl_ideal<K>(src, args.pos(1, "ideal I"));
        Ideal<K> J = decl_ideal<K>(src, args.pos(2, "ideal J"));
        Saturation<K> s = saturate(I, J, budget);
        return json{{"generators", gens_json(s.ideal.gens())}, {"exponent", s.exponent}};
    }
    if (cmd == "eliminate") {
        Ideal<K> I = decl_ideal<K>(src, args.pos(1, "ideal name"));
        if (!args.has("keep")) throw input_error("eliminate needs --keep v1,v2,...");
        Ideal<K> E = eliminate(I, keep_mask_from_flag(src, args.get("keep", "")), budget);
        return json{{"generators", gens_json(E.gens())}};
    }
    if (cmd == "implicitize") {
        auto polys = decl_polys<K>(src, args.pos(1, "system name"));
        auto res = implicitize(src.ring, polys, budget);
        return json{{"image_ring", res.image_ring->vars()},
                    {"generators", gens_json(res.image_ideal.gens())},
                    {"dimV", res.dim.dim},
                    {"cone", res.cone}};
    }
    if (cmd == "predict") {
        if (!args.has("t")) throw input_error("predict needs --t");
        auto fsys = decl_system<K>(src, args.pos(1, "system name"), budget);
        Prediction p = predict_nonempty(fsys, static_cast<int>(args.get_long("t", 0)), budget);
        return json{{"nonempty", p.nonempty}, {"dimV", p.dimV}, {"cone", p.cone}};
    }
    if (cmd == "residual" || cmd == "link") {
        seed_used = true;
        seed_out = seed;
        auto fsys = decl_system<K>(src, args.pos(1, "system name"), budget);
        const int t = cmd == "link" ? fsys.codim : static_cast<int>(args.get_long("t", 0));
        if (cmd == "residual" && !args.has("t")) throw input_error("residual needs --t");
        auto run = general_residual(fsys, t, seed, trials, budget, bound);
        return residual_json(run);
    }
    if (cmd == "augment") {
        auto fsys = decl_system<K>(src, args.pos(1, "system name"), budget);
        auto aug = augment_generators(fsys, budget);
        json sys = json::array();
        for (const auto& g : aug.gens) sys.push_back(poly_text(g));
        return json{{"system", sys}, {"codim", aug.codim}};
    }
    if (cmd == "hu-compare") {
        seed_used = true;
        seed_out = seed;
        if (!args.has("t")) throw input_error("hu-compare needs --t");
        auto fsys = decl_system<K>(src, args.pos(1, "system name"), budget);
        const int t = static_cast<int>(args.get_long("t", 0));
        auto sec = build_general_sections(fsys, t, seed, bound);
        auto hu = hu_colon_residual(sec.ideal_m, fsys.ideal_x, t, budget);
        return json{{"J", gens_json(hu.colon_ideal.gens())},
                    {"ht_ok", hu.ht_ok},
                    {"agrees", hu.agrees},
                    {"dimJ", dim_json(hu.colon_ideal.dimension(budget))}};
    }
    if (cmd == "sing-check") {
        seed_used = true;
        seed_out = seed;
        if (!args.has("t")) throw input_error("sing-check needs --t");
        auto fsys = decl_system<K>(src, args.pos(1, "system name"), budget);
        auto run = general_residual(fsys, static_cast<int>(args.get_long("t", 0)), seed, trials,
                                    budget, bound);
        auto rep = singular_locus_check(run, budget);
        return json{{"sing", dim_json(rep.sing_dim)},
                    {"bound_ok", rep.bound_ok},
                    {"threshold", rep.threshold},
                    {"equidimensionality_assumed", rep.equidim_assumed}};
    }
    if (cmd == "lct-monomial") {
        Rat l = lct_monomial(decl_ideal<K>(src, args.pos(1, "ideal name")), budget);
        return json{{"lct", l.fraction_str()}};
    }
    if (cmd == "glct-monomial") {
        Ideal<K> aX = decl_ideal<K>(src, args.pos(1, "ideal X"));
        Ideal<K> aZ = decl_ideal<K>(src, args.pos(2, "ideal Z"));
        const Rat lambda = args.get_rat("lambda", Rat(0));
        const long box = args.get_long("box", 0);
        Rat g = glct_monomial(aX, aZ, lambda, budget, box);
        return json{{"glct", g.fraction_str()}, {"lambda", lambda.fraction_str()}};
    }
    if (cmd == "mld-monomial") {
        if (args.positional.size() < 2)
            throw input_error("mld-monomial needs factors NAME or NAME^p/q");
        auto product = parse_factors<K>(src, args, 1);
        return mld_json(mld_monomial_origin(product, budget, args.get_long("box", 0)));
    }
    if (cmd == "mldmj-monomial") {
        Ideal<K> I_X = decl_ideal<K>(src, args.pos(1, "ideal X"));
        auto product = args.positional.size() > 2
                           ? parse_factors<K>(src, args, 2)
                           : FormalProduct<K>::make(src.ring, {});
        return mld_json(mldmj_origin_monomial(I_X, product, budget, args.get_long("box", 0)));
    }
    if (cmd == "mult-ideal") {
        if (!args.has("exponent")) throw input_error("mult-ideal needs --exponent c");
        Ideal<K> a = decl_ideal<K>(src, args.pos(1, "ideal name"));
        Ideal<K> m = multiplier_ideal_monomial(a, args.get_rat("exponent", Rat(0)), budget);
        return json{{"generators", gens_json(m.gens())}};
    }
    throw input_error("unknown command '" + cmd + "'; try 'help'");
}

json make_error(const std::string& kind, const std::string& message) {
    return json{{"error", json{{"kind", kind}, {"message", message}}}};
}

} // namespace

std::string usage() {
    return "resint <command> <input.ri | -> [names...] [flags]\n"
           "\n"
           "ideal commands:   gb dim colon saturate eliminate implicitize\n"
           "residual commands: residual link predict augment hu-compare sing-check\n"
           "invariants:       lct-monomial glct-monomial mld-monomial mldmj-monomial\n"
           "                  mult-ideal jets lct-jets\n"
           "corpus:           corpus <dir>\n"
           "\n"
           "flags: --t --seed --trials --level --lambda --exponent --budget\n"
           "       --bound --box --keep --order --rationals --p --jet-vars\n";
}

ExecResult execute(const std::vector<std::string>& args_in) {
    const auto start = std::chrono::steady_clock::now();
    json report;
    report["version"] = kVersion;
    try {
        Args args = parse_args(args_in);
        report["command"] = args.command;
        if (args.command == "help") {
            std::cout << usage();
            return {kOk, json{}};
        }
        if (args.command == "corpus")
            return corpus_run(args.pos(0, "corpus directory"),
                              static_cast<int>(args.get_long("workers", 0)));

        Budget budget(args.get_u64("budget", Budget::kDefaultLimit));
        const std::string path = args.pos(0, "input file");
        const std::string content = read_input(path);
        ProblemSource src = parse_source(content);
        report["inputs_digest"] = fnv1a_hex(content);

        std::uint64_t seed = 0;
        bool seed_used = false;
        json outputs;
        if (args.command == "jets" || args.command == "lct-jets")
            outputs = run_jets_typed(src, args, budget, args.command == "lct-jets");
        else if (src.ring->field().kind == FieldKind::Rationals)
            outputs = run_typed<Rat>(args, src, budget, seed, seed_used);
        else
            outputs = run_typed<Fp>(args, src, budget, seed, seed_used);

        report["outputs"] = outputs;
        if (seed_used) report["seed"] = seed;
        report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        return {kOk, report};
    } catch (const budget_error& e) {
        report.update(make_error("budget", e.what()));
        return {kBudgetError, report};
    } catch (const input_error& e) {
        report.update(make_error("input", e.what()));
        return {kInputError, report};
    } catch (const std::exception& e) {
        report.update(make_error("internal", e.what()));
        return {kMismatch, report};
    }
}

namespace {

json strip_volatile(json j) {
    j.erase("timing_ms");
    return j;
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

ExecResult corpus_run(const std::string& dir, int workers) {
    const fs::path cases = fs::path(dir) / "cases";
    const fs::path expected = fs::path(dir) / "expected";
    if (!fs::is_directory(cases))
        return {kInputError,
                make_error("input", "corpus directory '" + dir + "' has no cases/ subdirectory")};

    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(cases))
        if (entry.path().extension() == ".args") names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    if (names.empty())
        return {kInputError, make_error("input", "corpus has no cases (*.args files)")};

    if (workers <= 0) {
        if (const char* env = std::getenv("RESINT_WORKERS")) workers = std::atoi(env);
        if (workers <= 0)
            workers = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    }

    struct CaseResult {
        bool ok = false;
        json detail;
    };
    std::vector<CaseResult> results(names.size());
    std::atomic<std::size_t> next{0};

    auto run_case = [&](std::size_t i) {
        const std::string& name = names[i];
        json detail{{"name", name}};
        try {
            std::ifstream argf(cases / (name + ".args"));
            if (!argf) throw input_error("missing args file for case " + name);
            std::ostringstream buf;
            buf << argf.rdbuf();
            std::vector<std::string> argv = split_tokens(buf.str());
            for (auto& tok : argv)
                if (tok == "$CASE") tok = (cases / (name + ".ri")).string();

            std::ifstream expf(expected / (name + ".json"));
            if (!expf) throw input_error("missing expected report for case " + name);
            json want = strip_volatile(json::parse(expf));

            ExecResult got = execute(argv);
            json have = strip_volatile(got.report);
            if (have == want) {
                results[i] = {true, std::move(detail)};
                return;
            }
            detail["expected"] = want;
            detail["actual"] = have;
        } catch (const std::exception& e) {
            detail["error"] = e.what();
        }
        results[i] = {false, std::move(detail)};
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= names.size()) return;
                run_case(i);
            }
        });
    for (auto& th : pool) th.join();

    json failures = json::array();
    int passed = 0;
    for (const auto& r : results) {
        if (r.ok) ++passed;
        else failures.push_back(r.detail);
    }
    json summary{{"command", "corpus"},
                 {"version", kVersion},
                 {"cases", names.size()},
                 {"passed", passed},
                 {"failed", names.size() - static_cast<std::size_t>(passed)},
                 {"failures", failures}};
    return {passed == static_cast<int>(names.size()) ? kOk : kMismatch, summary};
}

} // namespace resint::cli

#include "dcrit/report.hpp"

#include "dcrit/darboux.hpp"
#include "dcrit/ext_complex.hpp"
#include "dcrit/ginzburg.hpp"
#include "dcrit/json_util.hpp"
#include "dcrit/universal_family.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace dcrit {

const char* verdict_name(CheckVerdict v)
{
    switch (v) {
    case CheckVerdict::pass: return "pass";
    case CheckVerdict::fail: return "fail";
    case CheckVerdict::warning: return "warning";
    }
    return "fail";
}

bool Report::all_passed() const
{
    for (const auto& c : checks)
        if (c.verdict == CheckVerdict::fail)
            return false;
    return true;
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

nlohmann::json Report::to_json(bool with_timing) const
{
    nlohmann::json j;
    j["tool"] = "dcrit";
    j["version"] = kToolVersion;
    j["schema"] = kReportSchema;
    j["config"] = {{"n", config.n}, {"prime", config.prime}, {"seed", config.seed}, {"samples", config.samples}};
    j["checks"] = nlohmann::json::array();
    std::map<std::string, int> summary{{"pass", 0}, {"fail", 0}, {"warning", 0}};
    for (const auto& c : checks) {
        nlohmann::json r{{"name", c.name},         {"operation", c.operation},
                         {"claim", c.claim},       {"verdict", verdict_name(c.verdict)},
                         {"details", c.details},   {"counterexample", c.counterexample}};
        if (with_timing)
            r["seconds"] = c.seconds;
        j["checks"].push_back(std::move(r));
        ++summary[verdict_name(c.verdict)];
    }
    j["summary"] = summary;
    return j;
}

std::string Report::to_text(bool with_timing) const
{
    std::ostringstream os;
    os << "dcrit " << kToolVersion << "  n=" << config.n << " prime=" << config.prime << " seed=" << config.seed
       << " samples=" << config.samples << '\n';
    for (const auto& c : checks) {
        std::string tag = verdict_name(c.verdict);
        for (auto& ch : tag)
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        os << '[' << tag << "] " << c.name << ": " << c.claim;
        if (with_timing)
            os << "  (" << std::fixed << std::setprecision(3) << c.seconds << "s)";
        os << '\n';
        if (!c.counterexample.is_null())
            os << "    counterexample: " << c.counterexample.dump() << '\n';
    }
    int fails = 0;
    for (const auto& c : checks)
        fails += c.verdict == CheckVerdict::fail ? 1 : 0;
    os << (fails ? std::to_string(fails) + " check(s) failed" : "all checks passed") << '\n';
    return os.str();
}

CheckRecord timed_check(std::string name, std::string operation, std::string claim,
                        const std::function<void(CheckRecord&)>& body)
{
    CheckRecord r;
    r.name = std::move(name);
    r.operation = std::move(operation);
    r.claim = std::move(claim);
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.verdict = CheckVerdict::fail;
        r.counterexample = {{"exception", e.what()}};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

void set_from(CheckRecord& r, const Verdict& v)
{
    r.verdict = v.ok ? CheckVerdict::pass : CheckVerdict::fail;
    if (!v.ok) {
        nlohmann::json j;
        to_json(j, v);
        r.counterexample = j;
    }
}

Report make_report(const RunConfig& cfg) { return Report{cfg, {}}; }

std::string nstr(int n) { return "n=" + std::to_string(n); }

nlohmann::json dims_json(const std::map<int, std::size_t>& dims)
{
    auto a = nlohmann::json::array();
    for (const auto& [p, d] : dims)
        a.push_back(d);
    return a;
}

}  // namespace

Report verify_cdga(const RunConfig& cfg)
{
    Report rep = make_report(cfg);
    const int n = cfg.n;
    rep.checks.push_back(timed_check("koszul-d-squared", "darboux-potential.build_koszul_cdga",
                                     "d^2 = 0 on the Koszul cdga including the gauge generators, " + nstr(n),
                                     [&](CheckRecord& r) {
                                         auto d = koszul_derivation(n);
                                         auto gens = check_derivation_squares_to_zero(d);
                                         auto k = build_koszul_cdga(n);
                                         auto full = check_d_squared(k.complex);
                                         r.details = {{"generators", gens.ok},
                                                      {"complex", full.ok},
                                                      {"ranks", k.complex.ranks()}};
                                         set_from(r, gens.ok ? full : gens);
                                     }));
    rep.checks.push_back(timed_check("cotangent-self-duality", "darboux-potential.build_cotangent_complex",
                                     "the 4-term cotangent complex is self-dual, " + nstr(n), [&](CheckRecord& r) {
                                         auto cot = build_cotangent_complex(n);
                                         auto sq = check_d_squared(cot.complex);
                                         auto dual = check_self_duality(cot);
                                         r.details = {{"ranks", cot.complex.ranks()}, {"d_squared", sq.ok}};
                                         set_from(r, sq.ok ? dual : sq);
                                     }));
    rep.checks.push_back(timed_check("hessian-block", "darboux-potential.build_cotangent_complex",
                                     "the degree -1 -> 0 block is minus the Hessian of W, " + nstr(n),
                                     [&](CheckRecord& r) { set_from(r, check_hessian_block(build_cotangent_complex(n))); }));
    rep.checks.push_back(timed_check("dW-commutators", "darboux-potential.build_potential",
                                     "dW/dX0(i,j) = [Y0,Z0](j,i) and cyclically, " + nstr(n),
                                     [&](CheckRecord& r) { set_from(r, check_dW_equals_commutators(n)); }));
    return rep;
}

Report verify_superpotential(const RunConfig& cfg)
{
    Report rep = make_report(cfg);
    const int n = cfg.n;
    SuperpotentialReport sp;
    auto run = timed_check("superpotential-identities", "darboux-potential.verify_superpotential_identities",
                           "d_dR phi = omega and d_dR Phi + d phi = 0, " + nstr(n), [&](CheckRecord& r) {
                               sp = verify_superpotential_identities(n, cfg.seed, std::max(cfg.samples, 1));
                               r.details = {{"omega_exact", sp.omega_exact.ok},
                                            {"potential_identity", sp.potential_identity.ok},
                                            {"omega_closed", sp.omega_closed.ok},
                                            {"omega_degrees", sp.omega_degrees.ok},
                                            {"calculus", sp.calculus.ok}};
                               r.verdict = sp.all_ok() ? CheckVerdict::pass : CheckVerdict::fail;
                               for (const auto* v : {&sp.omega_exact, &sp.potential_identity, &sp.omega_closed,
                                                     &sp.omega_degrees, &sp.calculus})
                                   if (!v->ok && r.counterexample.is_null()) {
                                       nlohmann::json j;
                                       to_json(j, *v);
                                       r.counterexample = j;
                                   }
                           });
    rep.checks.push_back(std::move(run));
    return rep;
}

namespace {

NCElement random_nc_element(std::mt19937_64& rng)
{
    NCElement e;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k) {
        NCWord w;
        int len = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i)
            w.push_back(kNCGens[rng() % kNCGens.size()]);
        e.add_term(w, Rational(static_cast<long>(rng() % 5) - 2));
    }
    return e;
}

}  // namespace

Report verify_family(const RunConfig& cfg)
{
    Report rep = make_report(cfg);
    const int n = cfg.n;
    auto action = build_universal_family(n);
    for (auto g : kNCGens) {
        std::string letter(1, nc_letter(g));
        rep.checks.push_back(timed_check("leibniz-" + letter, "cy3-resolution.build_universal_family",
                                         "d(" + letter + ".e_i) = (d" + letter + ").e_i, " + nstr(n),
                                         [&](CheckRecord& r) { set_from(r, check_leibniz(action, g)); }));
    }
    rep.checks.push_back(timed_check("leibniz-words", "cy3-resolution.build_universal_family",
                                     "Leibniz on " + std::to_string(cfg.samples) + " random elements of D, " + nstr(n),
                                     [&](CheckRecord& r) {
                                         std::mt19937_64 rng(cfg.seed);
                                         r.verdict = CheckVerdict::pass;
                                         for (int k = 0; k < cfg.samples; ++k) {
                                             auto e = random_nc_element(rng);
                                             auto v = check_leibniz(action, e);
                                             if (!v.ok) {
                                                 set_from(r, v);
                                                 r.counterexample["element"] = e.str();
                                                 return;
                                             }
                                         }
                                     }));
    rep.checks.push_back(timed_check("t-action-search", "cy3-resolution.build_universal_family",
                                     "exactly one t-action index pattern satisfies Leibniz, " + nstr(n),
                                     [&](CheckRecord& r) {
                                         auto s = search_t_action(n);
                                         auto passing = nlohmann::json::array();
                                         for (const auto& [a, ok] : s.results)
                                             if (ok)
                                                 passing.push_back(taction_name(a));
                                         r.details = {{"passing", passing}};
                                         if (s.winner) {
                                             r.details["winner"] = taction_name(*s.winner);
                                             r.verdict = CheckVerdict::pass;
                                         } else {
                                             r.verdict = CheckVerdict::fail;
                                             r.counterexample = {{"passing", passing}};
                                         }
                                     }));
    return rep;
}

Report verify_resolution(const RunConfig& cfg)
{
    Report rep = make_report(cfg);
    const int n = cfg.n;
    rep.checks.push_back(timed_check("ginzburg-alpha-squared", "cy3-resolution.build_ginzburg_resolution",
                                     "alpha o alpha = 0 with literal cancellation after rewriting",
                                     [&](CheckRecord& r) {
                                         auto checks = check_ginzburg_complex(build_ginzburg_resolution());
                                         r.verdict = CheckVerdict::pass;
                                         for (const auto& c : checks) {
                                             r.details[c.name] = {{"ok", c.ok}, {"residue", c.residue}};
                                             if (!c.ok) {
                                                 r.verdict = CheckVerdict::fail;
                                                 r.counterexample = {{"composite", c.name},
                                                                     {"unreduced", c.unreduced},
                                                                     {"residue", c.residue}};
                                             }
                                         }
                                     }));
    auto L = build_ext_complex(n);
    rep.checks.push_back(timed_check("ext-complex-d-squared", "cy3-resolution.build_ext_complex",
                                     "the total differential of L squares to zero, symbolically, " + nstr(n),
                                     [&](CheckRecord& r) {
                                         r.details = {{"ranks", L.complex.ranks()}};
                                         set_from(r, check_d_squared(L.complex));
                                     }));
    rep.checks.push_back(timed_check(
        "ext-complex-evaluation", "cy3-resolution.build_ext_complex",
        "L evaluated at commuting points equals L built from the bimodule resolution, " + nstr(n),
        [&](CheckRecord& r) {
            std::mt19937_64 rng(cfg.seed);
            auto pts = sample_cyclic_points(rng, n, cfg.samples);
            auto g = build_ginzburg_resolution();
            r.verdict = CheckVerdict::pass;
            r.details = {{"points", pts.size()}};
            for (std::size_t k = 0; k < pts.size(); ++k) {
                auto sym = evaluate_at(L.complex, point_assignment(pts[k], L.action.table));
                auto num = ext_complex_at(pts[k], g);
                if (sym.d != num.d) {
                    r.verdict = CheckVerdict::fail;
                    r.counterexample = {{"point", point_to_json(pts[k])}};
                    return;
                }
            }
        }));
    return rep;
}

Report verify_chainmap(const RunConfig& cfg)
{
    Report rep = make_report(cfg);
    const int n = cfg.n;
    auto m = build_comparison_map(n);
    rep.checks.push_back(timed_check("chainmap-symbolic", "cy3-resolution.build_comparison_map",
                                     "the comparison map commutes with the differentials, symbolically, " + nstr(n),
                                     [&](CheckRecord& r) {
                                         auto v = check_chain_map(m.chain_map());
                                         auto phi = m.numeric_phi();
                                         bool perms = true;
                                         for (const auto& [p, mat] : phi)
                                             perms = perms && is_signed_permutation(mat);
                                         r.details = {{"signed_permutations", perms},
                                                      {"all_invertible", v.all_invertible()}};
                                         set_from(r, v.commutes);
                                         if (v.commutes.ok && (!perms || !v.all_invertible())) {
                                             r.verdict = CheckVerdict::fail;
                                             r.counterexample = {{"reason", "phi is not invertible"}};
                                         }
                                     }));
    rep.checks.push_back(timed_check(
        "chainmap-points", "cy3-resolution.build_comparison_map",
        "the comparison map commutes and is invertible at " + std::to_string(cfg.samples) +
            " cyclic commuting points, " + nstr(n),
        [&](CheckRecord& r) {
            std::mt19937_64 rng(cfg.seed);
            auto pts = sample_cyclic_points(rng, n, cfg.samples);
            std::size_t good = 0;
            r.verdict = CheckVerdict::pass;
            for (const auto& pt : pts) {
                auto v = check_comparison_at(m, pt);
                if (v.commutes.ok && v.all_invertible()) {
                    ++good;
                } else if (r.counterexample.is_null()) {
                    r.verdict = CheckVerdict::fail;
                    nlohmann::json j;
                    to_json(j, v);
                    r.counterexample = {{"point", point_to_json(pt)}, {"verdict", j}};
                }
            }
            r.details = {{"points", pts.size()}, {"passed", good}};
        }));
    return rep;
}

Report ext_report(const RunConfig& cfg, const std::vector<MatrixPoint>& points, const std::string& label)
{
    Report rep = make_report(cfg);
    struct Row {
        ExtAtPoint l, k;
        bool cyclic = false;
        std::map<int, std::size_t> modp;
    };
    std::vector<Row> rows;
    auto compute = timed_check("ext-oracle-agreement", "moduli-points.koszul_ext_oracle",
                               "Ext dims of L equal the Koszul oracle at every point of " + label, [&](CheckRecord& r) {
                                   r.verdict = CheckVerdict::pass;
                                   auto per = nlohmann::json::array();
                                   for (const auto& pt : points) {
                                       Row row;
                                       row.l = ext_dims_at(pt);
                                       row.k = koszul_ext_oracle(pt);
                                       row.cyclic = pt.v && is_cyclic(pt);
                                       row.modp = homology_dims(reduce_mod(ext_complex_at(pt), cfg.prime), cfg.prime);
                                       per.push_back({{"n", pt.n},
                                                      {"provenance", pt.provenance},
                                                      {"ext", dims_json(row.l.dims)},
                                                      {"oracle", dims_json(row.k.dims)},
                                                      {"cyclic", row.cyclic},
                                                      {"pairing_ranks",
                                                       {row.l.pairings[0].rank, row.l.pairings[1].rank}}});
                                       if (row.l.dims != row.k.dims && r.counterexample.is_null()) {
                                           r.verdict = CheckVerdict::fail;
                                           r.counterexample = {{"point", point_to_json(pt)},
                                                               {"ext", dims_json(row.l.dims)},
                                                               {"oracle", dims_json(row.k.dims)}};
                                       }
                                       rows.push_back(std::move(row));
                                   }
                                   r.details = {{"points", points.size()}, {"per_point", per}};
                               });
    rep.checks.push_back(std::move(compute));
    if (rows.size() != points.size())
        return rep;
    rep.checks.push_back(timed_check("euler-characteristic", "cy3-resolution.ext_dims_at",
                                     "the Euler characteristic of Ext is 0 at every point of " + label,
                                     [&](CheckRecord& r) {
                                         r.verdict = CheckVerdict::pass;
                                         for (std::size_t k = 0; k < rows.size(); ++k)
                                             if (rows[k].l.euler != 0 || rows[k].k.euler != 0) {
                                                 r.verdict = CheckVerdict::fail;
                                                 r.counterexample = {{"point", point_to_json(points[k])}};
                                                 return;
                                             }
                                     }));
    rep.checks.push_back(timed_check("serre-pairing", "cy3-resolution.ext_dims_at",
                                     "the trace pairing H^k x H^{3-k} is perfect at every cyclic point of " + label,
                                     [&](CheckRecord& r) {
                                         r.verdict = CheckVerdict::pass;
                                         std::size_t cyclic = 0;
                                         for (std::size_t k = 0; k < rows.size(); ++k) {
                                             if (!rows[k].cyclic)
                                                 continue;
                                             ++cyclic;
                                             const auto& row = rows[k];
                                             if ((!row.l.pairing_perfect() || !row.k.pairing_perfect() ||
                                                  row.k.dims.at(0) < 1) &&
                                                 r.counterexample.is_null()) {
                                                 r.verdict = CheckVerdict::fail;
                                                 r.counterexample = {{"point", point_to_json(points[k])}};
                                             }
                                         }
                                         r.details = {{"cyclic_points", cyclic}};
                                     }));
    rep.checks.push_back(timed_check("ext-mod-p", "complexes.homology_dims",
                                     "Ext dims over F_p match the rational computation (p = " +
                                         std::to_string(cfg.prime) + ")",
                                     [&](CheckRecord& r) {
                                         r.verdict = CheckVerdict::pass;
                                         std::size_t drops = 0;
                                         for (std::size_t k = 0; k < rows.size(); ++k)
                                             if (rows[k].modp != rows[k].l.dims) {
                                                 ++drops;
                                                 r.verdict = CheckVerdict::warning;
                                                 if (r.counterexample.is_null())
                                                     r.counterexample = {{"point", point_to_json(points[k])}};
                                             }
                                         r.details = {{"mismatches", drops}};
                                     }));
    return rep;
}

Report ext_report(const RunConfig& cfg)
{
    auto corpus = build_corpus(cfg.n, cfg.samples, cfg.seed);
    return ext_report(cfg, corpus,
                      "the partition corpus for n <= " + std::to_string(cfg.n) + " plus " +
                          std::to_string(cfg.samples) + " random conjugates");
}

Report partitions_report(const RunConfig& cfg)
{
    Report rep = make_report(cfg);
    const int top = std::max(cfg.n, 1);
    rep.checks.push_back(timed_check("partition-counts", "moduli-points.enumerate_partitions",
                                     "corner growth and height matrices enumerate the same plane partitions, n = 1.." +
                                         std::to_string(top),
                                     [&](CheckRecord& r) {
                                         auto counts = nlohmann::json::array();
                                         r.verdict = CheckVerdict::pass;
                                         for (int n = 1; n <= top; ++n) {
                                             auto a = enumerate_partitions(n);
                                             auto b = enumerate_partitions_by_heights(n);
                                             counts.push_back(a.size());
                                             if (a != b && r.counterexample.is_null()) {
                                                 r.verdict = CheckVerdict::fail;
                                                 r.counterexample = {{"n", n},
                                                                     {"corner_growth", a.size()},
                                                                     {"heights", b.size()}};
                                             }
                                         }
                                         r.details = {{"counts", counts}};
                                     }));
    rep.checks.push_back(timed_check("partition-points", "moduli-points.point_from_partition",
                                     "every partition point is commuting, critical and cyclic, n = 1.." +
                                         std::to_string(top),
                                     [&](CheckRecord& r) {
                                         r.verdict = CheckVerdict::pass;
                                         std::size_t total = 0;
                                         for (int n = 1; n <= top; ++n)
                                             for (const auto& pp : enumerate_partitions(n)) {
                                                 ++total;
                                                 auto pt = point_from_partition(pp);
                                                 if ((!is_critical(pt).ok() || !is_cyclic(pt)) &&
                                                     r.counterexample.is_null()) {
                                                     r.verdict = CheckVerdict::fail;
                                                     r.counterexample = {{"partition", pp.str()}};
                                                 }
                                             }
                                         r.details = {{"points", total}};
                                     }));
    return rep;
}

Report toric_chart_report(const RunConfig& cfg, const SurfaceSpec& surface, const std::vector<CoxPoint>& points)
{
    Report rep = make_report(cfg);
    rep.checks.push_back(timed_check("toric-chart", "toric-cover.find_chart",
                                     "a chart isomorphic to C^2 contains all " + std::to_string(points.size()) +
                                         " points",
                                     [&](CheckRecord& r) {
                                         auto s = build_surface(surface);
                                         auto res = find_chart(s, points);
                                         r.details = chart_result_to_json(res);
                                         r.details["surface"] = surface_to_json(surface);
                                         r.verdict = res.roundtrip ? CheckVerdict::pass : CheckVerdict::fail;
                                         if (!res.roundtrip)
                                             r.counterexample = {{"reason", "round trip failed"}};
                                     }));
    return rep;
}

std::vector<SurfaceSpec> standard_surfaces()
{
    SurfaceSpec p2;
    SurfaceSpec f0;
    f0.base = SurfaceSpec::Base::Fn;
    SurfaceSpec f2 = f0;
    f2.hirzebruch = 2;
    SurfaceSpec tower;
    tower.blowups = {0, 1};
    return {p2, f0, f2, tower};
}

namespace {

std::string surface_label(const SurfaceSpec& s)
{
    std::string l = s.base == SurfaceSpec::Base::P2 ? "P2" : "F" + std::to_string(s.hirzebruch);
    for (auto k : s.blowups)
        l += "+b" + std::to_string(k);
    return l;
}

}  // namespace

Report toric_cover_report(const RunConfig& cfg, const std::vector<SurfaceSpec>& surfaces)
{
    Report rep = make_report(cfg);
    const auto trials = static_cast<std::size_t>(std::max(cfg.samples, 1));
    for (const auto& spec : surfaces) {
        auto label = surface_label(spec);
        rep.checks.push_back(timed_check("toric-cover-" + label, "toric-cover.verify_cover_property",
                                         "every random configuration on " + label +
                                             " lies in one chart, with exact round trip",
                                         [&](CheckRecord& r) {
                                             auto st = verify_cover_property(build_surface(spec), trials, 4, cfg.seed);
                                             r.details = stats_to_json(st);
                                             r.details["surface"] = surface_to_json(spec);
                                             r.verdict = st.all_ok() ? CheckVerdict::pass : CheckVerdict::fail;
                                             if (!st.all_ok())
                                                 r.counterexample = stats_to_json(st);
                                         }));
    }
    return rep;
}

Report run_all(const RunConfig& cfg)
{
    Report rep = make_report(cfg);
    rep.append(verify_cdga(cfg));
    rep.append(verify_superpotential(cfg));
    rep.append(verify_family(cfg));
    rep.append(verify_resolution(cfg));
    rep.append(verify_chainmap(cfg));
    rep.append(ext_report(cfg));
    rep.append(partitions_report(cfg));
    rep.append(toric_cover_report(cfg, standard_surfaces()));
    return rep;
}

}  // namespace dcrit

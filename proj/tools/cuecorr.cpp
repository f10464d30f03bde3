#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "cuecorr/golden.hpp"
#include "cuecorr/json_io.hpp"
#include "cuecorr/montecarlo.hpp"
#include "cuecorr/sf_transition.hpp"
#include "cuecorr/weingarten.hpp"

using namespace cuecorr;

namespace {

#ifndef CUECORR_DEFAULT_DATA_DIR
#define CUECORR_DEFAULT_DATA_DIR "data"
#endif

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

// Classes ordered the way the expansions are usually displayed: larger
// reduced size first, reverse lexicographic within a size.
std::vector<std::pair<Partition, Rat>> display_order(const ClassVector& v) {
    std::vector<std::pair<Partition, Rat>> items(v.coeffs().begin(), v.coeffs().end());
    std::map<Partition, int> rank;
    {
        int maxsize = 0;
        for (const auto& [mu, c] : items) maxsize = std::max(maxsize, mu.size());
        int r = 0;
        for (int size = maxsize; size >= 0; --size)
            for (const Partition& mu : enumerate_partitions(size)) rank[mu] = r++;
    }
    std::sort(items.begin(), items.end(),
              [&](const auto& a, const auto& b) { return rank[a.first] < rank[b.first]; });
    return items;
}

std::string format_class_vector(const ClassVector& v) {
    if (v.coeffs().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : display_order(v)) {
        if (!first) os << " + ";
        os << rat_str(c) << " c(" << mu.to_string() << ")";
        first = false;
    }
    return os.str();
}

ClassVector class_expand_via_characters(const SymFunSpec& f, int n) {
    ClassVector out(n);
    for (int size = f.degree(); size >= 0; size -= 2)
        for (const Partition& mu : enumerate_partitions(size))
            if (mu.weight() <= n) out.set(mu, class_coeff(f, mu, n));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact CUE matrix-element correlators and class expansions of "
                 "symmetric functions in Jucys-Murphy elements"};
    app.require_subcommand(1);

    bool as_json = false;
    int threads = 1;
    if (const char* env = std::getenv("CUECORR_THREADS")) threads = std::atoi(env);
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--threads", threads, "worker threads for the lambda sums");

    std::string data_dir = CUECORR_DEFAULT_DATA_DIR;

    // correlator
    auto* cor = app.add_subcommand("correlator", "exact correlator of matrix entries");
    int cor_n = 0, cor_N = 0;
    std::string cor_i, cor_j, cor_ip, cor_jp;
    bool cor_symbolic = false;
    cor->add_option("--n", cor_n, "number of factors")->required();
    cor->add_option("--N", cor_N, "matrix dimension")->required();
    cor->add_option("--i", cor_i, "row indices, comma list")->required();
    cor->add_option("--j", cor_j, "column indices, comma list")->required();
    cor->add_option("--iprime", cor_ip, "conjugate row indices")->required();
    cor->add_option("--jprime", cor_jp, "conjugate column indices")->required();
    cor->add_flag("--symbolic", cor_symbolic,
                  "also emit the stable-range (N >= n) value as a rational function of N");

    // weingarten
    auto* wg = app.add_subcommand("weingarten", "symbolic per-permutation correlator");
    int wg_n = 0, wg_N = 0;
    std::string wg_pi;
    wg->add_option("--n", wg_n, "degree")->required();
    wg->add_option("--pi", wg_pi, "permutation, cycle or one-line notation")->required();
    wg->add_option("--N", wg_N, "also evaluate at this dimension");

    // class-expand
    auto* ce = app.add_subcommand("class-expand", "class expansion of f(Xi_n)");
    std::string ce_f;
    int ce_n = 0;
    ce->add_option("--f", ce_f, "symmetric function, e.g. h3, m2,1, e2*e1")->required();
    ce->add_option("--n", ce_n, "symmetric group degree")->required();

    // class-poly
    auto* cp = app.add_subcommand("class-poly", "interpolated class coefficient polynomial");
    std::string cp_f, cp_mu;
    cp->add_option("--f", cp_f, "symmetric function")->required();
    cp->add_option("--mu", cp_mu, "reduced class, comma list ('-' for identity)")->required();

    // top-table
    auto* tt = app.add_subcommand("top-table", "table of top class coefficients L^lambda_mu");
    int tt_k = 0;
    tt->add_option("--k", tt_k, "degree")->required();

    // series
    auto* se = app.add_subcommand("series", "1/N expansion coefficients F^{|mu|+2g}_mu(n)");
    std::string se_mu;
    int se_n = 0, se_gmax = 3;
    se->add_option("--mu", se_mu, "reduced cycle-type")->required();
    se->add_option("--n", se_n, "symmetric group degree")->required();
    se->add_option("--gmax", se_gmax, "highest order 1/N^{2g}");

    // cyclic
    auto* cy = app.add_subcommand("cyclic", "closed form for the full-cycle correlator");
    int cy_n = 0;
    cy->add_option("--n", cy_n, "cycle length")->required();

    // one-fixed-point
    auto* ofp = app.add_subcommand("one-fixed-point",
                                   "generating function for the (n-1)-cycle class");
    int ofp_n = 0;
    ofp->add_option("--n", ofp_n, "degree (>= 4)")->required();

    // transition-check
    auto* tc = app.add_subcommand("transition-check",
                                  "verify (-1)^k h*_mu = sum L^lambda_mu e_lambda");
    int tc_k = 0;
    tc->add_option("--k", tc_k, "degree")->required();

    // appendix-verify
    auto* av = app.add_subcommand("appendix-verify", "recompute the golden expansion tables");
    int av_k = -1;
    av->add_option("--k", av_k, "restrict the L tables to one degree");
    av->add_option("--data-dir", data_dir, "directory holding the golden data files");

    // mc-check
    auto* mc = app.add_subcommand("mc-check", "Monte Carlo validation of an exact correlator");
    int mc_n = 0, mc_N = 0;
    long mc_samples = 100000;
    std::uint64_t mc_seed = 1;
    std::string mc_i, mc_j, mc_ip, mc_jp;
    bool mc_entry_mean = false;
    mc->add_option("--n", mc_n, "number of factors")->required();
    mc->add_option("--N", mc_N, "matrix dimension")->required();
    mc->add_option("--samples", mc_samples, "sample count (>= 1000)");
    mc->add_option("--seed", mc_seed, "RNG seed");
    mc->add_option("--i", mc_i, "row indices (default diagonal 1..n)");
    mc->add_option("--j", mc_j, "column indices");
    mc->add_option("--iprime", mc_ip, "conjugate row indices");
    mc->add_option("--jprime", mc_jp, "conjugate column indices");
    mc->add_flag("--entry-mean", mc_entry_mean, "estimate <u_11> instead of a correlator");

    // gram-det
    auto* gd = app.add_subcommand("gram-det", "factored determinant of the z-symbolic Gram matrix");
    int gd_n = 0;
    gd->add_option("--n", gd_n, "degree (<= 5)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }
    thread_count() = std::max(1, threads);

    if (cor->parsed()) {
        auto mk = [&](const std::string& s) {
            auto v = parse_int_list(s);
            if (static_cast<int>(v.size()) != cor_n)
                throw DomainError("index tuple length != n");
            return IndexTuple(v, cor_N);
        };
        CorrelatorQuery q(mk(cor_i), mk(cor_j), mk(cor_ip), mk(cor_jp));
        Rat value = general_correlator(q);
        json out;
        out["value"] = rat_str(value);
        out["decimal"] = value.get_d();
        if (!as_json)
            std::cout << rat_str(value) << " (" << value.get_d() << ")\n";
        if (cor_symbolic) {
            if (cor_N < cor_n)
                throw DomainError("--symbolic requires N >= n (stable range)");
            // stable range: sum over alignment pairs of symbolic Weingarten terms
            RationalFunctionQ total;
            std::map<Partition, Int> counts;
            auto sigmas = enumerate_SNn(cor_n, cor_n);
            for (const auto& sigma : sigmas)
                for (const auto& tau : sigmas) {
                    bool rows = true, cols = true;
                    for (int k = 1; k <= cor_n && (rows || cols); ++k) {
                        if (q.i.values[k - 1] != q.iprime.values[sigma(k) - 1]) rows = false;
                        if (q.j.values[k - 1] != q.jprime.values[tau(k) - 1]) cols = false;
                    }
                    if (rows && cols)
                        counts[reduced_cycle_type(compose(sigma, inverse(tau)))] += 1;
                }
            for (const auto& [mu, count] : counts)
                total = total + permutation_correlator_symbolic(mu, cor_n) *
                                    RationalFunctionQ::constant(Rat(count));
            out["symbolic"] = emit_rational_function(total, "N");
            if (!as_json) std::cout << "symbolic: " << total.factored_string("N") << "\n";
        }
        if (as_json) std::cout << out.dump() << "\n";
        return 0;
    }

    if (wg->parsed()) {
        Permutation pi = parse_permutation(wg_pi, wg_n);
        Partition mu = reduced_cycle_type(pi);
        RationalFunctionQ f = permutation_correlator_symbolic(mu, wg_n);
        if (as_json) {
            json out;
            out["pi"] = one_line_string(pi);
            out["reduced_cycle_type"] = mu.parts();
            out["symbolic"] = emit_rational_function(f, "N");
            if (wg_N > 0) out["value"] = rat_str(permutation_correlator(pi, wg_N));
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "pi = " << one_line_string(pi) << ", reduced cycle-type ("
                      << mu.to_string() << ")\n";
            std::cout << f.factored_string("N") << "\n";
            if (wg_N > 0)
                std::cout << "at N=" << wg_N << ": "
                          << rat_str(permutation_correlator(pi, wg_N)) << "\n";
        }
        return 0;
    }

    if (ce->parsed()) {
        SymFunSpec f = SymFunSpec::parse(ce_f);
        ClassVector v = class_expand_via_characters(f, ce_n);
        if (as_json)
            std::cout << emit_class_vector(v).dump() << "\n";
        else
            std::cout << format_class_vector(v) << "\n";
        return 0;
    }

    if (cp->parsed()) {
        SymFunSpec f = SymFunSpec::parse(cp_f);
        PolynomialQ p = interpolate_class_poly(f, parse_partition(cp_mu));
        if (as_json) {
            std::cout << emit_polynomial(p, "t").dump() << "\n";
        } else {
            std::cout << p.to_string("t") << "\n";
            std::cout << "factored: " << p.factored_string("t") << "\n";
        }
        return 0;
    }

    if (tt->parsed()) {
        auto labels = enumerate_partitions(tt_k);
        json rows = json::array();
        std::vector<Int> sums(labels.size(), Int(0));
        std::size_t width = 0;
        for (const auto& lam : labels) width = std::max(width, lam.to_string().size());
        for (const auto& lam : labels) {
            json row = json::array();
            if (!as_json) std::cout << lam.to_string() << std::string(width + 2 - lam.to_string().size(), ' ');
            for (std::size_t c = 0; c < labels.size(); ++c) {
                Int v = top_coeff_L(lam, labels[c]);
                sums[c] += v;
                row.push_back(v.get_str());
                if (!as_json) std::cout << v.get_str() << (c + 1 < labels.size() ? " " : "");
            }
            if (!as_json) std::cout << "\n";
            rows.push_back(std::move(row));
        }
        json sumrow = json::array();
        if (!as_json) std::cout << "SUM" << std::string(width + 2 - 3, ' ');
        for (std::size_t c = 0; c < labels.size(); ++c) {
            sumrow.push_back(sums[c].get_str());
            if (!as_json) std::cout << sums[c].get_str() << (c + 1 < labels.size() ? " " : "");
        }
        if (!as_json) std::cout << "\n";
        if (as_json) {
            json out;
            out["k"] = tt_k;
            json ls = json::array();
            for (const auto& lam : labels) ls.push_back(lam.parts());
            out["labels"] = std::move(ls);
            out["entries"] = std::move(rows);
            out["sum"] = std::move(sumrow);
            std::cout << out.dump() << "\n";
        }
        return 0;
    }

    if (se->parsed()) {
        Partition mu = parse_partition(se_mu);
        auto coeffs = expansion_series(mu, se_n, se_gmax);
        if (as_json) {
            json out;
            out["mu"] = mu.parts();
            out["n"] = se_n;
            json cs = json::array();
            for (const auto& c : coeffs) cs.push_back(rat_str(c));
            out["coefficients"] = std::move(cs);
            std::cout << out.dump() << "\n";
        } else {
            for (std::size_t g = 0; g < coeffs.size(); ++g)
                std::cout << "F^" << (mu.size() + 2 * g) << " = " << rat_str(coeffs[g]) << "\n";
        }
        return 0;
    }

    if (cy->parsed()) {
        RationalFunctionQ f = cyclic_closed_form(cy_n);
        if (as_json)
            std::cout << emit_rational_function(f, "N").dump() << "\n";
        else
            std::cout << f.factored_string("N") << "\n";
        return 0;
    }

    if (ofp->parsed()) {
        OneFixedPointResult res = one_fixed_point_gf(ofp_n);
        auto series = res.gf.series_at_zero(ofp_n + 4);
        if (as_json) {
            json out;
            out["gf"] = emit_rational_function(res.gf, "z");
            json as = json::array();
            for (const auto& a : res.a_coeffs) as.push_back(rat_str(a));
            out["a"] = std::move(as);
            json cs = json::array();
            for (const auto& c : series) cs.push_back(rat_str(c));
            out["series"] = std::move(cs);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "Phi_(" << (ofp_n - 2) << ")(z;" << ofp_n << ") = "
                      << res.gf.factored_string("z") << "\n";
            int r = ofp_n % 2;
            for (std::size_t idx = 0; idx < res.a_coeffs.size(); ++idx)
                std::cout << "a_" << (r + 2 * idx) << " = " << rat_str(res.a_coeffs[idx]) << "\n";
            std::cout << "series:";
            for (const auto& c : series) std::cout << " " << rat_str(c);
            std::cout << "\n";
        }
        return 0;
    }

    if (tc->parsed()) {
        TransitionReport report = transition_check(tc_k);
        json cols = json::array();
        for (const auto& col : report.columns) {
            if (!as_json) {
                std::cout << "mu = (" << col.mu.to_string() << "):";
                for (const Partition& lam : enumerate_partitions(tc_k))
                    std::cout << " " << rat_str(col.actual.coeff(lam));
                std::cout << " -> " << (col.pass ? "PASS" : "FAIL") << "\n";
            }
            cols.push_back({{"mu", col.mu.parts()}, {"pass", col.pass}});
        }
        if (as_json)
            std::cout << json{{"k", report.k}, {"pass", report.pass}, {"columns", cols}}.dump()
                      << "\n";
        else
            std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
        return report.pass ? 0 : 1;
    }

    if (av->parsed()) {
        auto a1 = load_appendix_a1(data_dir + "/appendix_a1.txt");
        auto a2 = load_appendix_a2(data_dir + "/appendix_a2.txt");
        VerifyReport r1 = av_k > 0 ? VerifyReport{} : verify_appendix_a1(a1);
        VerifyReport r2 = verify_appendix_a2(a2, av_k);
        bool pass = r1.pass && r2.pass;
        if (as_json) {
            json out{{"pass", pass},
                     {"checks", r1.checks + r2.checks},
                     {"failures", json::array()}};
            for (const auto& fmsg : r1.failures) out["failures"].push_back(fmsg);
            for (const auto& fmsg : r2.failures) out["failures"].push_back(fmsg);
            std::cout << out.dump() << "\n";
        } else {
            for (const auto& line : r1.lines) std::cout << line << "\n";
            for (const auto& line : r2.lines) std::cout << line << "\n";
            for (const auto& fmsg : r1.failures) std::cout << "FAIL " << fmsg << "\n";
            for (const auto& fmsg : r2.failures) std::cout << "FAIL " << fmsg << "\n";
            std::cout << (pass ? "PASS" : "FAIL") << " (" << (r1.checks + r2.checks)
                      << " checks)\n";
        }
        return pass ? 0 : 1;
    }

    if (mc->parsed()) {
        EstimateReport report;
        if (mc_entry_mean) {
            report = estimate_entry_mean(mc_N, mc_samples, mc_seed);
        } else {
            auto mk = [&](const std::string& s) {
                std::vector<int> v;
                if (s.empty())
                    for (int k = 1; k <= mc_n; ++k) v.push_back(std::min(k, mc_N));
                else
                    v = parse_int_list(s);
                return IndexTuple(v, mc_N);
            };
            CorrelatorQuery q(mk(mc_i), mk(mc_j), mk(mc_ip), mk(mc_jp));
            report = validate(q, mc_samples, mc_seed);
        }
        std::cout << emit_estimate_report(report).dump() << "\n";
        return (report.has_target && report.z_score > 4.0) ? 1 : 0;
    }

    if (gd->parsed()) {
        GramDetReport report = gram_determinant(gd_n);
        if (as_json) {
            json exps = json::object();
            for (const auto& [k, e] : report.exponents) exps[std::to_string(k)] = e.get_str();
            std::cout << json{{"n", report.n},
                              {"exponents", exps},
                              {"total_degree", report.total_degree.get_str()},
                              {"direct_checked", report.direct_checked},
                              {"routes_agree", report.routes_agree}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "det G(z) = z^" << report.exponents.at(0).get_str();
            for (const auto& [k, e] : report.exponents)
                if (k > 0) std::cout << " (z^2-" << k * k << ")^" << e.get_str();
            std::cout << "\n";
            std::cout << "total degree " << report.total_degree.get_str() << " = n*n!"
                      << (report.direct_checked
                              ? (report.routes_agree ? "; direct determinant agrees"
                                                     : "; DIRECT DETERMINANT DISAGREES")
                              : "")
                      << "\n";
        }
        return report.routes_agree ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

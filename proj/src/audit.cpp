#include "wvlab/audit.hpp"

#include <numbers>

#include "wvlab/husimi.hpp"
#include "wvlab/nonclassicality.hpp"
#include "wvlab/parallel.hpp"
#include "wvlab/shifts.hpp"

namespace wvlab {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<AuditEntry> audit_spssv(const SpssvConfig& c, OracleOptions opt) {
    std::vector<AuditEntry> out;
    auto add = [&](const char* name, MetricReport rep) {
        out.push_back({name, c.sel.alpha, c.sel.delta, c.s, c.sq.r, rep});
    };
    add("P", make_report(overlap_P(c.s, c.sq), overlap_P_oracle(c.s, c.sq, opt)));
    add("P_S", success_prob_spssv(c, opt));
    add("lambda", lambda_report(c, opt));
    add("sigma_x_S", make_report(transition_value_spssv(c), transition_value_spssv_oracle(c, opt)));
    const StateVector phi = final_pointer_spssv(c, opt);
    const auto closed = expectations_closed_spssv(c);
    const auto oracle = expectations_oracle(phi);
    add("<a>", make_report(closed.a, oracle.a));
    add("<a^2>", make_report(closed.a2, oracle.a2));
    add("<a^dag a>", make_report(closed.n, oracle.n));
    add("<a^dag2 a^2>", make_report(closed.a2dag_a2, oracle.a2dag_a2));
    add("W", make_report(skew_from(closed), skew_from(oracle)));
    const cplx a4 = fourth_moment_oracle(phi);
    add("AS", make_report(as_squeezing(closed, a4), as_squeezing(oracle, a4)));
    const auto closed_pn = photon_dist_closed(c, 3);
    const auto oracle_pn = photon_dist_oracle(phi);
    add("P(n=1)", make_report(closed_pn[1], oracle_pn[1]));
    add("P(n=2)", make_report(closed_pn[2], oracle_pn[2]));
    add("Q(mu=0.7+0.3i)", q_single(c, {0.7, 0.3}, opt));
    return out;
}

std::vector<AuditEntry> audit_tmsv(const TmsvConfig& c, OracleOptions opt) {
    std::vector<AuditEntry> out;
    auto add = [&](const char* name, MetricReport rep) {
        out.push_back({name, c.sel.alpha, c.sel.delta, c.s, c.sq.eta, rep});
    };
    add("K", make_report(overlap_K(c.s, c.sq), overlap_K_oracle(c.s, c.sq, opt)));
    add("P_T", success_prob_tmsv(c, opt));
    add("kappa", kappa_report(c, opt));
    const cplx sigma_oracle = transition_value_tmsv_oracle(c, opt);
    add("sigma_x_T", make_report(transition_value_tmsv(c), sigma_oracle));
    add("sigma_x_T_uncorrected", make_report(transition_value_tmsv_uncorrected(c), sigma_oracle));
    const auto closed = expectations_closed_tmsv(c);
    const auto oracle = expectations_oracle_two(final_pointer_tmsv(c, opt));
    add("<n_a>", make_report(closed.na, oracle.na));
    add("<n_b>", make_report(closed.nb, oracle.nb));
    add("<ab>", make_report(closed.ab, oracle.ab));
    add("<n_a n_b>", make_report(closed.na_nb, oracle.na_nb));
    add("<a^2 b^2>", make_report(closed.a2b2, oracle.a2b2));
    const auto [l1, l2] = lambda12(c);
    const auto [ea, eb] = lambda12_oracle(c, opt);
    add("Lambda_1", make_report(l1, ea));
    add("Lambda_2", make_report(l2, eb));
    add("S(Theta=pi/4)", make_report(sum_squeezing_from(closed, kPi / 4), sum_squeezing_from(oracle, kPi / 4)));
    add("Q(mu1=0.5,mu2=-0.5)", q_two(c, {0.5, 0.0}, {-0.5, 0.0}, opt));
    return out;
}

}  // namespace

AuditGrid default_audit_grid() {
    return {{kPi / 3, 2 * kPi / 3, 8 * kPi / 9}, {0.3, 0.7, 1.5}, {0.1, 0.5, 1.0}, kPi / 6};
}

std::vector<AuditEntry> run_audit(const AuditGrid& grid, OracleOptions single, OracleOptions two,
                                  unsigned threads) {
    const std::size_t na = grid.alpha.size(), ns = grid.s.size(), nq = grid.squeeze.size();
    if (!na || !ns || !nq) throw Error(Errc::config, "audit grids must be non-empty");
    const std::size_t points = na * ns * nq;
    std::vector<std::vector<AuditEntry>> blocks(2 * points + 1);
    parallel_for(blocks.size(), threads ? threads : default_threads(), [&](std::size_t k) {
        if (k == 2 * points) {
            // Unperturbed pointer: closed P(n) at s = 0 against |<n|phi_1>|^2.
            const SpssvConfig c{{8 * kPi / 9, 0.0}, 0.0, {0.1, 0.0}};
            const auto closed = photon_dist_closed(c, 1);
            const auto oracle = photon_dist_oracle(final_pointer_spssv(c, single));
            blocks[k].push_back({"P(n=1)", c.sel.alpha, 0.0, 0.0, 0.1, make_report(closed[1], oracle[1])});
            return;
        }
        const std::size_t p = k % points;
        const double alpha = grid.alpha[p / (ns * nq)];
        const double s = grid.s[(p / nq) % ns];
        const double q = grid.squeeze[p % nq];
        if (k < points)
            blocks[k] = audit_spssv({{alpha, grid.delta}, s, {q, 0.0}}, single);
        else
            blocks[k] = audit_tmsv({{alpha, grid.delta}, s, {q, 0.0}}, two);
    });
    std::vector<AuditEntry> all;
    for (auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
    return all;
}

}  // namespace wvlab

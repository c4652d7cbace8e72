// schubert: command-line front end for the Schubert calculus toolkit.
//
// Exit codes: 0 success, 1 validation error, 2 budget exceeded,
// 3 verification failure.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "schubert/bounds.hpp"
#include "schubert/json.hpp"
#include "schubert/oracle.hpp"
#include "schubert/ring.hpp"
#include "schubert/verify.hpp"
#include "schubert/young.hpp"

namespace {

using namespace schubert;

enum ExitCode : int { kOk = 0, kValidation = 1, kBudget = 2, kVerifyFailed = 3 };

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 12345;
    bool json() const { return format == "json"; }
};

struct RectArgs {
    int k = 0;
    int n = 0;
};

void add_rect(CLI::App* cmd, RectArgs& r) {
    cmd->add_option("-k", r.k, "subspace dimension (rows of the rectangle)")->required();
    cmd->add_option("-n", r.n, "ambient dimension")->required();
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string bound_line(const BoundReport& r) {
    std::string line = r.formula + " = " + std::to_string(r.value);
    if (r.vacuously_true)
        line += " (vacuously true: e = 0)";
    else if (r.vacuous)
        line += " (vacuous)";
    return line;
}

int report(const Globals& g, const VerifyOutcome& outcome, json extra = json::object()) {
    if (g.json()) {
        json j = {{"suite", outcome.suite},
                  {"passed", outcome.passed},
                  {"checks", outcome.checks},
                  {"summary", outcome.summary},
                  {"counterexamples", outcome.counterexamples}};
        for (auto& [key, value] : extra.items()) j[key] = value;
        print_json(j);
    } else {
        std::cout << outcome.summary << '\n';
        for (const auto& c : outcome.counterexamples) std::cout << "  counterexample: " << c << '\n';
    }
    return outcome.passed ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert calculus on Grassmannians G_k(C^n) with a finite-field oracle"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed for randomized sweeps");

    // cup ------------------------------------------------------------------
    RectArgs cup_rect;
    std::string cup_a, cup_b;
    auto* cup_cmd = app.add_subcommand("cup", "product of two Schubert classes in A*(k,n)");
    add_rect(cup_cmd, cup_rect);
    cup_cmd->add_option("lambda", cup_a, "first diagram, e.g. \"2,1\" (\"0\" = empty)")->required();
    cup_cmd->add_option("mu", cup_b, "second diagram")->required();

    // overlap --------------------------------------------------------------
    RectArgs ov_rect;
    std::string ov_a, ov_b;
    bool ov_draw = false;
    auto* ov_cmd = app.add_subcommand("overlap", "non-overlap test for lambda and rotated mu");
    add_rect(ov_cmd, ov_rect);
    ov_cmd->add_option("lambda", ov_a)->required();
    ov_cmd->add_option("mu", ov_b)->required();
    ov_cmd->add_flag("--draw", ov_draw, "also print the rectangle picture");

    // bound ----------------------------------------------------------------
    auto* bound_cmd = app.add_subcommand("bound", "codimension bounds");
    bound_cmd->require_subcommand(1);
    int b_n = 0, b_m = 0, b_e = 0, b_k = -1;
    bool b_sweep = false;
    auto* b_main = bound_cmd->add_subcommand("main", "codim X >= m+1-e for column-invariant X");
    b_main->add_option("-n", b_n)->required();
    b_main->add_option("-m", b_m)->required();
    b_main->add_option("-e", b_e)->required();
    auto* b_schubert = bound_cmd->add_subcommand("schubert", "codim Y >= k+1-e for Y missing S_k(E)");
    b_schubert->add_option("-e", b_e)->required();
    b_schubert->add_option("-k", b_k)->required();
    b_schubert->add_option("-n", b_n)->required();
    auto* b_rank = bound_cmd->add_subcommand("rank", "codim R_k = (m-k)(n-k)");
    b_rank->add_option("-n", b_n)->required();
    b_rank->add_option("-m", b_m)->required();
    b_rank->add_option("-k", b_k)->required();
    auto* b_f = bound_cmd->add_subcommand("f", "f(k) = (m-k)(n-k) + k + 1 - e");
    b_f->add_option("-n", b_n)->required();
    b_f->add_option("-m", b_m)->required();
    b_f->add_option("-e", b_e)->required();
    b_f->add_option("-k", b_k, "single k (default: k = min(m, n-1))");
    b_f->add_flag("--sweep", b_sweep, "tabulate f over 0 <= k <= min(m, n-1)");

    // diagram --------------------------------------------------------------
    auto* diag_cmd = app.add_subcommand("diagram", "convert between diagram encodings");
    diag_cmd->require_subcommand(1);
    RectArgs d_rect;
    std::string d_arg;
    auto* d_from = diag_cmd->add_subcommand("from-jumps", "jumping numbers -> diagram");
    auto* d_to = diag_cmd->add_subcommand("to-jumps", "diagram -> jumping numbers and rank table");
    auto* d_comp = diag_cmd->add_subcommand("complement", "rotated complement in the rectangle");
    for (auto* c : {d_from, d_to, d_comp}) {
        add_rect(c, d_rect);
        c->add_option("value", d_arg, "comma-separated list")->required();
    }

    // verify ---------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "cross-validation sweeps against brute force");
    verify_cmd->require_subcommand(1);
    int v_max_area = 12, v_q = 2, v_n = 4, v_k = 2, v_m = 2, v_samples = 200;
    auto* v_lemma = verify_cmd->add_subcommand("lemma", "cup_nonzero == overlap_test exhaustively");
    v_lemma->add_option("--max-area", v_max_area, "largest k(n-k)")->capture_default_str();
    auto* v_cells = verify_cmd->add_subcommand("cells", "Schubert cell census over F_q");
    v_cells->add_option("-q", v_q)->capture_default_str();
    v_cells->add_option("-n", v_n)->capture_default_str();
    v_cells->add_option("-k", v_k)->capture_default_str();
    auto* v_ranks = verify_cmd->add_subcommand("ranks", "rank census of n x m matrices over F_q");
    auto* v_fibers = verify_cmd->add_subcommand("fibers", "fibers of A -> col A over F_q");
    for (auto* c : {v_ranks, v_fibers}) {
        c->add_option("-q", v_q)->capture_default_str();
        c->add_option("-n", v_n)->capture_default_str();
        c->add_option("-m", v_m)->capture_default_str();
    }
    int v_rk = 0, v_rn = 0;
    auto* v_rich = verify_cmd->add_subcommand("richardson", "Richardson nonemptiness vs overlap test");
    v_rich->add_option("-q", v_q)->capture_default_str();
    v_rich->add_option("-k", v_rk, "single rectangle (default: (1,3),(2,4),(2,5),(3,5))");
    v_rich->add_option("-n", v_rn);
    auto* v_assoc = verify_cmd->add_subcommand("associativity", "randomized associativity/commutativity");
    v_assoc->add_option("--samples", v_samples)->capture_default_str();
    v_assoc->add_option("--max-area", v_max_area)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kValidation;
    }

    try {
        if (*cup_cmd) {
            const RectangleContext ctx(cup_rect.k, cup_rect.n);
            const auto a = parse_diagram(cup_a);
            const auto b = parse_diagram(cup_b);
            detail::require_fits(a, ctx, "lambda");
            detail::require_fits(b, ctx, "mu");
            const auto product = cup(a, b, ctx);
            if (g.json())
                print_json(to_json(product));
            else
                std::cout << to_string(product) << '\n';
            return kOk;
        }

        if (*ov_cmd) {
            const RectangleContext ctx(ov_rect.k, ov_rect.n);
            const auto a = parse_diagram(ov_a);
            const auto b = parse_diagram(ov_b);
            const auto row = first_overlap_row(a, b, ctx);
            if (g.json()) {
                json j = {{"no_overlap", !row.has_value()}, {"k", ctx.k}, {"n", ctx.n},
                          {"lambda", diagram_to_json(a)}, {"mu", diagram_to_json(b)}};
                if (row) {
                    j["row"] = *row;
                    j["lhs"] = a.row(*row) + b.row(ctx.k + 1 - *row);
                    j["width"] = ctx.width();
                }
                print_json(j);
            } else {
                if (row) {
                    const int i = *row;
                    std::cout << "overlap at row i=" << i << " (" << a.row(i) << "+" << b.row(ctx.k + 1 - i) << ">"
                              << ctx.width() << ")\n";
                } else {
                    std::cout << "no-overlap (product nonzero)\n";
                }
                if (ov_draw) std::cout << render_overlap(a, b, ctx);
            }
            return kOk;
        }

        if (*bound_cmd) {
            if (*b_f) {
                const MatrixSpaceShape shape(b_n, b_m);
                const int top = std::min(b_m, b_n - 1);
                if (b_sweep) {
                    const auto values = reduction_f_sweep(shape, b_e);
                    const auto main = main_bound(shape, b_e);
                    if (g.json()) {
                        json table = json::array();
                        for (std::size_t k = 0; k < values.size(); ++k) table.push_back({{"k", k}, {"f", values[k]}});
                        print_json({{"formula", "(m-k)(n-k)+k+1-e"}, {"table", table}, {"main_bound", to_json(main)}});
                    } else {
                        std::cout << std::setw(4) << "k" << std::setw(8) << "f(k)" << '\n';
                        for (std::size_t k = 0; k < values.size(); ++k)
                            std::cout << std::setw(4) << k << std::setw(8) << values[k] << '\n';
                        std::cout << "f(" << top << ") = " << values.back() << "; " << bound_line(main) << '\n';
                    }
                } else {
                    const int k = b_k >= 0 ? b_k : top;
                    const auto value = reduction_f(k, shape, b_e);
                    if (g.json())
                        print_json({{"formula", "(m-k)(n-k)+k+1-e"}, {"k", k}, {"value", value}});
                    else
                        std::cout << "f(" << k << ") = " << value << '\n';
                }
                return kOk;
            }
            BoundReport r;
            if (*b_main) r = main_bound(MatrixSpaceShape(b_n, b_m), b_e);
            if (*b_schubert) r = schubert_bound(b_e, RectangleContext(b_k, b_n));
            if (*b_rank) r = rank_bound(MatrixSpaceShape(b_n, b_m), b_k);
            if (g.json())
                print_json(to_json(r));
            else
                std::cout << bound_line(r) << '\n';
            return kOk;
        }

        if (*diag_cmd) {
            const RectangleContext ctx(d_rect.k, d_rect.n);
            if (*d_from) {
                const JumpingNumbers jumps{parse_int_list(d_arg)};
                const auto d = diagram_from_jumps(jumps, ctx);
                if (g.json())
                    print_json({{"diagram", diagram_to_json(d)}, {"k", ctx.k}, {"n", ctx.n}});
                else
                    std::cout << to_string(d, ctx) << '\n';
            } else if (*d_to) {
                const auto d = parse_diagram(d_arg);
                const auto jumps = jumps_from_diagram(d, ctx);
                const auto table = rank_table_from_jumps(jumps, ctx);
                if (g.json()) {
                    print_json({{"diagram", diagram_to_json(d)}, {"jumps", jumps.indices}, {"rank_table", table.values}});
                } else {
                    std::cout << "jumps:      " << to_string(jumps.indices) << '\n';
                    std::cout << "rank table: " << to_string(table.values) << '\n';
                }
            } else {
                const auto d = parse_diagram(d_arg);
                const auto c = complement(d, ctx);
                if (g.json())
                    print_json({{"diagram", diagram_to_json(c)}, {"k", ctx.k}, {"n", ctx.n}});
                else
                    std::cout << to_string(c, ctx) << '\n';
            }
            return kOk;
        }

        if (*verify_cmd) {
            const Budget budget = Budget::from_env();
            if (*v_lemma) return report(g, verify_lemma(v_max_area));
            if (*v_cells) {
                const auto outcome = verify_cells(v_q, v_n, v_k, budget);
                const CellCensusReport census{v_q, v_n, v_k, schubert_cell_census(v_q, v_n, v_k, budget)};
                return report(g, outcome, {{"census", to_json(census)}});
            }
            if (*v_ranks) {
                const auto outcome = verify_ranks(v_q, v_n, v_m, budget);
                const RankCensusReport census{v_q, v_n, v_m, rank_census(v_q, v_n, v_m, budget)};
                return report(g, outcome, {{"census", to_json(census)}});
            }
            if (*v_fibers) return report(g, verify_fibers(v_q, v_n, v_m, budget));
            if (*v_rich) {
                std::vector<RectangleContext> rects;
                if (v_rk > 0 || v_rn > 0)
                    rects.emplace_back(v_rk, v_rn);
                else
                    rects = {{1, 3}, {2, 4}, {2, 5}, {3, 5}};
                return report(g, verify_richardson(v_q, rects, budget));
            }
            if (*v_assoc) return report(g, verify_associativity(g.seed, v_samples, v_max_area));
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kOk;
}

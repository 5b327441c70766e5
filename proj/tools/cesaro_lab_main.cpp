// cesaro-lab: command-line front end for the Cesàro kernel / fractional
// difference / Cesàro mean experiments.
//
// Exit codes: 0 success, 1 configuration or input error, 2 failed
// --assert gate, 3 numeric failure (non-convergence, unmet bounds).

#include "cesaro/algebras.hpp"
#include "cesaro/calculus.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/fixtures.hpp"
#include "cesaro/kernels.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/serialize.hpp"
#include "cesaro/weyl.hpp"
#include "cesaro/zseq.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cesaro::CesaroTransform;
using cesaro::CMatrix;
using cesaro::Complex;
using cesaro::DecayCurve;
using cesaro::Json;
using cesaro::ZSeq;

// A failed --assert gate (exit code 2, distinct from config errors).
struct AssertionFailure : std::runtime_error {
    explicit AssertionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
    double alpha = 0.0;
    std::int64_t n_max = 1;
    std::string fixture;
    std::string fn;
    std::string out = "-";
    std::string format = "csv";
    std::string grid; // empty = per-command default
    bool assert_mode = false;
};

std::vector<std::int64_t> make_grid(const Options& opt, const std::string& fallback) {
    const std::string kind = opt.grid.empty() ? fallback : opt.grid;
    std::vector<std::int64_t> g;
    if (kind == "dyadic") {
        for (std::int64_t n = 1; n <= opt.n_max; n *= 2)
            g.push_back(n);
    } else {
        for (std::int64_t n = 1; n <= opt.n_max; ++n)
            g.push_back(n);
    }
    return g;
}

ZSeq load_sequence_arg(const std::string& fn) {
    const std::string prefix = "coeffs:";
    if (fn.rfind(prefix, 0) != 0)
        throw std::invalid_argument("--fn must be 'annihilator' or 'coeffs:<path>', got '" + fn +
                                    "'");
    const Json j = cesaro::load_json_file(fn.substr(prefix.size()));
    // Accept either a bare sequence or a periodic function wrapping one.
    if (j.is_object() && j.contains("coeffs"))
        return cesaro::periodic_fn_from_json(j).coeffs;
    return cesaro::zseq_from_json(j);
}

void write_output(const Options& opt, const std::string& content) {
    if (opt.out == "-") {
        std::cout << content;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::invalid_argument("cannot open output file " + opt.out);
    file << content;
    if (!file)
        throw std::invalid_argument("cannot write output file " + opt.out);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string curve_output(const Options& opt, const DecayCurve& curve) {
    if (opt.format == "json")
        return dump(cesaro::curve_to_json(curve));
    std::ostringstream out;
    cesaro::write_curve_csv(out, curve);
    return out.str();
}

// --- kernel -----------------------------------------------------------

int run_kernel(const Options& opt) {
    const cesaro::KernelTable table(opt.alpha, opt.n_max);
    if (opt.assert_mode) {
        for (std::int64_t n = 0; n < table.n_max(); ++n) {
            const double expected =
                table[n] * (opt.alpha + static_cast<double>(n)) / static_cast<double>(n + 1);
            if (table[n + 1] != expected)
                throw AssertionFailure("kernel recurrence violated at n = " + std::to_string(n));
        }
        for (std::int64_t n = 1; n <= table.n_max(); ++n) {
            if (opt.alpha > 1.0 && table[n] < table[n - 1] * (1.0 - 1e-15))
                throw AssertionFailure("kernel not non-decreasing at n = " + std::to_string(n));
            if (opt.alpha < 1.0 && opt.alpha > 0.0 && table[n] > table[n - 1] * (1.0 + 1e-15))
                throw AssertionFailure("kernel not non-increasing at n = " + std::to_string(n));
            if (opt.alpha == 0.0 && table[n] != 0.0)
                throw AssertionFailure("order-zero kernel must vanish for n >= 1");
        }
    }
    if (opt.format == "json") {
        Json rows = Json::array();
        for (std::int64_t n = 0; n <= table.n_max(); ++n)
            rows.push_back(Json{{"n", n}, {"value", table[n]}});
        return write_output(opt, dump(Json{{"meta", Json{{"command", "kernel"},
                                                         {"alpha", opt.alpha},
                                                         {"n_max", opt.n_max}}},
                                          {"rows", rows}})),
               0;
    }
    std::ostringstream out;
    out << "n,value\n";
    for (std::int64_t n = 0; n <= table.n_max(); ++n)
        out << n << ',' << cesaro::format_sci(table[n]) << '\n';
    return write_output(opt, out.str()), 0;
}

// --- weyl -------------------------------------------------------------

int run_weyl(const Options& opt) {
    const ZSeq f = load_sequence_arg(opt.fn);
    const ZSeq w = cesaro::weyl_combined(f, opt.alpha);
    if (opt.assert_mode) {
        // The combined difference inverts exactly on finite supports.
        const ZSeq back = cesaro::weyl_combined(w, -opt.alpha);
        const double defect = cesaro::max_abs_diff(back, f);
        if (!(defect <= 1e-10 * (1.0 + f.l1_norm())))
            throw AssertionFailure("round-trip defect " + std::to_string(defect));
        if (opt.alpha > 0.0 && opt.alpha != std::floor(opt.alpha)) {
            for (std::int64_t n = 0; n <= std::max<std::int64_t>(f.hi(), 0); ++n) {
                const Complex direct = cesaro::weyl_diff_plus_at(f, opt.alpha, n);
                const Complex composed = cesaro::weyl_diff_plus_via_composition(f, opt.alpha, n);
                if (!(std::abs(direct - composed) <= 1e-10 * (1.0 + std::abs(direct))))
                    throw AssertionFailure("composition route differs from series at n = " +
                                           std::to_string(n));
            }
        }
    }
    if (opt.format == "json")
        return write_output(opt, dump(Json{{"meta", Json{{"command", "weyl"},
                                                         {"alpha", opt.alpha},
                                                         {"fn", opt.fn}}},
                                          {"result", cesaro::zseq_to_json(w)}})),
               0;
    std::ostringstream out;
    out << "n,re,im\n";
    if (!w.empty())
        for (std::int64_t n = w.lo(); n <= w.hi(); ++n)
            out << n << ',' << cesaro::format_sci(w.at(n).real()) << ','
                << cesaro::format_sci(w.at(n).imag()) << '\n';
    return write_output(opt, out.str()), 0;
}

// --- norm -------------------------------------------------------------

int run_norm(const Options& opt) {
    const ZSeq f = load_sequence_arg(opt.fn);
    const double l1 = f.l1_norm();
    const auto [qm, qp] = cesaro::q_norm_split(f, opt.alpha);
    const double q = qm + qp;
    const double qbar = opt.alpha > 0.0 ? cesaro::q_bar_norm(f, opt.alpha) : l1;
    if (opt.assert_mode) {
        const double again = cesaro::q_norm(f, opt.alpha);
        if (!(std::abs(again - q) <= 1e-12 * (1.0 + q)))
            throw AssertionFailure("split halves do not add up to the norm");
        if (!(q >= l1 * (1.0 - 1e-10) - 1e-12))
            throw AssertionFailure("weighted norm fell below the l1 norm");
    }
    const Json j{{"alpha", opt.alpha}, {"l1", l1},     {"q", q},
                 {"q_minus", qm},      {"q_plus", qp}, {"q_bar", qbar}};
    if (opt.format == "json")
        return write_output(opt, dump(j)), 0;
    std::ostringstream out;
    out << "name,value\n";
    for (const char* key : {"l1", "q", "q_minus", "q_plus", "q_bar"})
        out << key << ',' << cesaro::format_sci(j.at(key).get<double>()) << '\n';
    return write_output(opt, out.str()), 0;
}

// --- cesaro -----------------------------------------------------------

int run_cesaro(const Options& opt) {
    const auto fixture = cesaro::resolve_fixture(opt.fixture);
    CesaroTransform transform(fixture.matrix, opt.alpha);
    transform.prepare(opt.n_max);
    const auto grid = make_grid(opt, "dyadic");

    std::vector<DecayCurve::Row> rows;
    for (std::int64_t n : grid)
        rows.push_back({n, cesaro::operator_norm(transform.cesaro_mean(n))});
    cesaro::CurveMeta meta;
    meta.fixture = fixture.name;
    meta.order = opt.alpha;
    const auto probe = cesaro::cesaro_bounded_probe(fixture.matrix, opt.alpha, opt.n_max);
    meta.notes.push_back(probe.non_growing() ? "mean norms non-growing over the probed range"
                                             : "mean norms growing over the probed range");
    const DecayCurve curve(std::move(rows), std::move(meta));

    if (opt.assert_mode) {
        // Recompute a few Cesàro sums from scratch against the cache.
        const cesaro::KernelTable k(opt.alpha, opt.n_max);
        std::size_t checked = 0;
        for (std::size_t i = 0; i < grid.size() && checked < 8; i += std::max<std::size_t>(1, grid.size() / 8), ++checked) {
            const std::int64_t n = grid[i];
            CMatrix fresh = CMatrix::Zero(transform.dim(), transform.dim());
            CMatrix power = CMatrix::Identity(transform.dim(), transform.dim());
            for (std::int64_t j = 0; j <= n; ++j) {
                fresh += k[n - j] * power;
                power = power * fixture.matrix;
            }
            const double defect = cesaro::operator_norm(fresh - transform.cesaro_sum(n));
            if (!(defect <= 1e-10 * (1.0 + cesaro::operator_norm(fresh))))
                throw AssertionFailure("cached Cesàro sum differs from fresh evaluation at n = " +
                                       std::to_string(n));
        }
    }

    if (opt.format == "json") {
        Json j = cesaro::curve_to_json(curve);
        j["probe"] = Json{{"max", probe.max_value},
                          {"lower_half_max", probe.lower_half_max},
                          {"upper_half_max", probe.upper_half_max},
                          {"non_growing", probe.non_growing()}};
        return write_output(opt, dump(j)), 0;
    }
    return write_output(opt, curve_output(opt, curve)), 0;
}

// --- kt-decay ---------------------------------------------------------

int run_kt_decay(const Options& opt) {
    const auto fixture = cesaro::resolve_fixture(opt.fixture);
    CesaroTransform transform(fixture.matrix, opt.alpha);
    ZSeq f;
    if (opt.fn == "annihilator") {
        const auto points = cesaro::peripheral_spectrum(fixture.matrix, 1e-6);
        f = cesaro::annihilator_polynomial(points).coeffs;
    } else {
        f = load_sequence_arg(opt.fn);
    }
    const auto grid = make_grid(opt, "dyadic");
    DecayCurve curve = cesaro::kt_decay_curve(transform, f, grid);
    curve.meta().fixture = fixture.name;
    curve.meta().fn = opt.fn;
    if (opt.assert_mode && !curve.decreasing_trend()) {
        std::string detail;
        for (const auto& note : curve.meta().notes)
            detail += "; " + note;
        throw AssertionFailure("decay gate failed: upper window max " +
                               std::to_string(curve.upper_window_max()) +
                               " >= lower window max " +
                               std::to_string(curve.lower_window_max()) + detail);
    }
    return write_output(opt, curve_output(opt, curve)), 0;
}

// --- mean-diff --------------------------------------------------------

int run_mean_diff(const Options& opt) {
    const auto fixture = cesaro::resolve_fixture(opt.fixture);
    CesaroTransform transform(fixture.matrix, opt.alpha);
    const auto grid = make_grid(opt, "dyadic");
    DecayCurve curve = cesaro::mean_difference_curve(transform, grid);
    curve.meta().fixture = fixture.name;
    if (opt.assert_mode && !curve.decreasing_trend())
        throw AssertionFailure("consecutive-mean differences are not decaying (upper window " +
                               std::to_string(curve.upper_window_max()) + " vs lower " +
                               std::to_string(curve.lower_window_max()) + ")");
    return write_output(opt, curve_output(opt, curve)), 0;
}

// --- ergodic ----------------------------------------------------------

int run_ergodic(const Options& opt) {
    if (!(opt.alpha >= 1.0))
        throw std::invalid_argument("ergodic: --alpha must be >= 1");
    const auto fixture = cesaro::resolve_fixture(opt.fixture);
    CesaroTransform transform(fixture.matrix, opt.alpha);
    cesaro::ErgodicReport report = cesaro::ergodic_growth_report(transform, opt.n_max);
    report.meta.fixture = fixture.name;
    if (opt.assert_mode && !(report.mean_ratio_decreasing && report.power_ratio_decreasing))
        throw AssertionFailure("ergodic growth ratios are not decaying");
    if (opt.format == "csv") {
        if (opt.out == "-")
            throw std::invalid_argument(
                "ergodic: csv format writes two files; give --out a file path");
        auto rows_csv = [](const std::vector<DecayCurve::Row>& rows) {
            std::ostringstream out;
            out << "n,value\n";
            for (const auto& row : rows)
                out << row.n << ',' << cesaro::format_sci(row.value) << '\n';
            return out.str();
        };
        Options power_opt = opt;
        const auto dot = opt.out.rfind('.');
        power_opt.out = dot == std::string::npos
                            ? opt.out + "_power"
                            : opt.out.substr(0, dot) + "_power" + opt.out.substr(dot);
        write_output(opt, rows_csv(report.mean_ratio));
        write_output(power_opt, rows_csv(report.power_ratio));
        return 0;
    }
    auto rows_json = [](const std::vector<DecayCurve::Row>& rows) {
        Json out = Json::array();
        for (const auto& row : rows)
            out.push_back(Json{{"n", row.n}, {"value", row.value}});
        return out;
    };
    const Json j{{"meta", Json{{"command", "ergodic"},
                               {"fixture", report.meta.fixture},
                               {"alpha", report.meta.order},
                               {"notes", report.meta.notes}}},
                 {"mean_ratio", Json{{"rows", rows_json(report.mean_ratio)},
                                     {"decreasing", report.mean_ratio_decreasing}}},
                 {"power_ratio", Json{{"rows", rows_json(report.power_ratio)},
                                      {"decreasing", report.power_ratio_decreasing}}}};
    return write_output(opt, dump(j)), 0;
}

// --- identities -------------------------------------------------------

int run_identities(const Options& opt) {
    if (!(opt.alpha >= 1.0))
        throw std::invalid_argument("identities: --alpha must be >= 1");
    const auto fixture = cesaro::resolve_fixture(opt.fixture);
    CesaroTransform transform(fixture.matrix, opt.alpha);
    CesaroTransform aux(fixture.matrix, opt.alpha - 1.0);
    transform.prepare(opt.n_max + 1);
    aux.prepare(opt.n_max + 1);
    const auto grid = make_grid(opt, "linear");
    const double tnorm = cesaro::operator_norm(fixture.matrix);

    Json rows = Json::array();
    std::ostringstream csv;
    csv << "n,value\n";
    for (std::int64_t n : grid) {
        const double step = cesaro::mean_step_identity_residual(transform, aux, n);
        const double shift = cesaro::mean_shift_identity_residual(transform, aux, n);
        if (opt.assert_mode) {
            const double mnorm = cesaro::operator_norm(transform.cesaro_mean(n));
            if (!(step <= 1e-9 * (1.0 + mnorm)))
                throw AssertionFailure("step identity residual " + std::to_string(step) +
                                       " too large at n = " + std::to_string(n));
            if (!(shift <= 1e-9 * (1.0 + tnorm)))
                throw AssertionFailure("shift identity residual " + std::to_string(shift) +
                                       " too large at n = " + std::to_string(n));
        }
        rows.push_back(Json{{"n", n}, {"step_residual", step}, {"shift_residual", shift}});
        csv << n << ',' << cesaro::format_sci(std::max(step, shift)) << '\n';
    }
    if (opt.format == "json")
        return write_output(opt, dump(Json{{"meta", Json{{"command", "identities"},
                                                         {"fixture", fixture.name},
                                                         {"alpha", opt.alpha},
                                                         {"n_max", opt.n_max}}},
                                          {"rows", rows}})),
               0;
    return write_output(opt, csv.str()), 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale experiments with Cesàro kernels, fractional differences,\n"
                 "weighted Wiener norms and Cesàro means of matrix power orbits."};
    app.require_subcommand(1);

    Options opt;
    std::string command;

    auto add_common = [&opt](CLI::App* sub, bool with_alpha = true) {
        if (with_alpha)
            sub->add_option("--alpha", opt.alpha, "Fractional order (>= 0)")
                ->required()
                ->check(CLI::NonNegativeNumber);
        sub->add_option("--out", opt.out, "Output path ('-' for stdout)");
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--assert", opt.assert_mode,
                      "Turn documented checks into pass/fail gates (exit 2 on failure)");
    };
    auto add_n_max = [&opt](CLI::App* sub) {
        sub->add_option("--n-max", opt.n_max, "Largest index")
            ->required()
            ->check(CLI::PositiveNumber);
    };
    auto add_grid = [&opt](CLI::App* sub) {
        sub->add_option("--grid", opt.grid, "Evaluation grid")
            ->check(CLI::IsMember({"linear", "dyadic"}));
    };
    auto add_fixture = [&opt](CLI::App* sub) {
        sub->add_option("--fixture", opt.fixture, "Matrix fixture name or JSON path")->required();
    };
    auto add_fn = [&opt](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--fn", opt.fn,
                                  "Sequence input: 'annihilator' or 'coeffs:<path>'");
        if (required)
            o->required();
    };

    auto* kernel = app.add_subcommand("kernel", "Tabulate Cesàro kernel values");
    add_common(kernel);
    add_n_max(kernel);

    auto* weyl = app.add_subcommand("weyl", "Apply the combined fractional difference");
    add_common(weyl);
    add_fn(weyl, true);

    auto* norm = app.add_subcommand("norm", "Weighted convolution-algebra norms of a sequence");
    add_common(norm);
    add_fn(norm, true);

    auto* cesaro_cmd = app.add_subcommand("cesaro", "Cesàro mean norms of a matrix power orbit");
    add_common(cesaro_cmd);
    add_n_max(cesaro_cmd);
    add_grid(cesaro_cmd);
    add_fixture(cesaro_cmd);

    auto* kt = app.add_subcommand("kt-decay",
                                  "Decay of ||M^a(n) theta(f)|| for peripherally vanishing f");
    add_common(kt);
    add_n_max(kt);
    add_grid(kt);
    add_fixture(kt);
    add_fn(kt, false);
    opt.fn = "annihilator";

    auto* mean_diff = app.add_subcommand("mean-diff", "Decay of consecutive Cesàro mean differences");
    add_common(mean_diff);
    add_n_max(mean_diff);
    add_grid(mean_diff);
    add_fixture(mean_diff);

    auto* ergodic = app.add_subcommand("ergodic", "Growth ratios behind the ergodic corollaries");
    add_common(ergodic);
    add_n_max(ergodic);
    add_fixture(ergodic);

    auto* identities = app.add_subcommand("identities", "Exact mean identities (step and shift)");
    add_common(identities);
    add_n_max(identities);
    add_grid(identities);
    add_fixture(identities);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (kernel->parsed())
        command = "kernel";
    else if (weyl->parsed())
        command = "weyl";
    else if (norm->parsed())
        command = "norm";
    else if (cesaro_cmd->parsed())
        command = "cesaro";
    else if (kt->parsed())
        command = "kt-decay";
    else if (mean_diff->parsed())
        command = "mean-diff";
    else if (ergodic->parsed())
        command = "ergodic";
    else if (identities->parsed())
        command = "identities";

    try {
        if (command == "kernel")
            return run_kernel(opt);
        if (command == "weyl")
            return run_weyl(opt);
        if (command == "norm")
            return run_norm(opt);
        if (command == "cesaro")
            return run_cesaro(opt);
        if (command == "kt-decay")
            return run_kt_decay(opt);
        if (command == "mean-diff")
            return run_mean_diff(opt);
        if (command == "ergodic")
            return run_ergodic(opt);
        if (command == "identities")
            return run_identities(opt);
        std::cerr << "error: no command selected\n";
        return 1;
    } catch (const AssertionFailure& e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return 2;
    } catch (const cesaro::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

#include "tightgon/analytic.hpp"
#include "tightgon/circumscribe.hpp"
#include "tightgon/nest.hpp"
#include "tightgon/polygon.hpp"
#include "tightgon/svg.hpp"
#include "tightgon/translate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnknownName = 3;
constexpr int kExitIo = 4;

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw std::domain_error("range must look like a..b");
    Range r;
    try {
        r.lo = std::stoi(text.substr(0, pos));
        r.hi = std::stoi(text.substr(pos + 2));
    } catch (const std::exception&) {
        throw std::domain_error("range bounds must be integers");
    }
    if (r.lo < 3 || r.hi < r.lo)
        throw std::domain_error("range must satisfy 3 <= a <= b");
    return r;
}

std::string rounded(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

int cmd_ratio(int n, int m, const std::string& mode, const std::string& preset) {
    ordered_json out;
    out["n"] = n;
    out["m"] = m;
    if (!preset.empty()) {
        const auto constraints = tightgon::preset_constraints(preset);
        const bool pair_ok = (preset == "3-4" && n == 3 && m == 4) ||
                             (preset == "4-3" && n == 4 && m == 3) ||
                             (preset == "3-5" && n == 3 && m == 5);
        if (!pair_ok)
            throw std::domain_error("preset does not match --n/--m");
        const auto sol = tightgon::solve_translated(n, m, constraints);
        out["mode"] = "translated";
        out["preset"] = preset;
        out["ratio"] = sol.ratio;
        out["shift"] = sol.shift;
        out["t_values"] = sol.t_values;
    } else if (mode == "rotated") {
        const auto sol = tightgon::tight_rotated(n, m);
        out["mode"] = mode;
        out["ratio"] = sol.base.ratio;
        out["j_i"] = sol.base.j_i;
        out["j_o"] = sol.base.j_o;
        out["t"] = sol.base.t;
        out["mismatch"] = sol.base.mismatch;
        out["s"] = sol.s;
        out["alpha"] = sol.alpha;
    } else {
        const auto sol = tightgon::tight_standard(n, m);
        out["mode"] = mode;
        out["ratio"] = sol.ratio;
        out["j_i"] = sol.j_i;
        out["j_o"] = sol.j_o;
        out["t"] = sol.t;
        out["mismatch"] = sol.mismatch;
        out["s"] = 0;
        out["alpha"] = 0.0;
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_table(const Range& rows, const Range& cols, const std::string& mode, int digits) {
    std::cout << "n\\m";
    for (int m = cols.lo; m <= cols.hi; ++m)
        std::cout << "," << m;
    std::cout << "\n";
    for (int n = rows.lo; n <= rows.hi; ++n) {
        std::cout << n;
        for (int m = cols.lo; m <= cols.hi; ++m) {
            const double r = mode == "rotated" ? tightgon::tight_rotated(n, m).base.ratio
                                               : tightgon::tight_standard(n, m).ratio;
            std::cout << "," << rounded(r, digits);
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_primes(int p_max) {
    const auto rows = tightgon::prime_pair_table(p_max);
    std::cout << "n,m,j_i,j_o,mismatch\n";
    int violations = 0;
    for (const auto& r : rows) {
        std::cout << r.n << "," << r.m << "," << r.j_i << "," << r.j_o << ","
                  << r.mismatch << "\n";
        if (!r.unit_mismatch)
            ++violations;
    }
    if (violations == 0)
        std::cout << "summary,all mismatches have magnitude 1\n";
    else
        std::cout << "summary," << violations << " rows with |mismatch| != 1\n";
    return kExitOk;
}

int cmd_constant(const std::string& name, std::optional<int> order, std::optional<int> cutoff) {
    tightgon::ConstantResult res;
    tightgon::SeriesConfig cfg;
    const bool custom = order.has_value() || cutoff.has_value();
    if (order)
        cfg.taylor_order = *order;
    if (cutoff)
        cfg.cutoff_M = *cutoff;

    if (name == "limit_consecutive_up")
        res = custom ? tightgon::limit_consecutive_up(cfg) : tightgon::limit_consecutive_up();
    else if (name == "limit_consecutive_down")
        res = custom ? tightgon::limit_consecutive_down(cfg) : tightgon::limit_consecutive_down();
    else if (name == "limit_primes_up")
        res = tightgon::limit_primes(tightgon::Direction::up);
    else if (name == "limit_primes_down")
        res = tightgon::limit_primes(tightgon::Direction::down);
    else if (name == "limit_rotated_up")
        res = custom ? tightgon::limit_rotated_up(cfg) : tightgon::limit_rotated_up();
    else if (name == "wrench_angle_rad")
        res = tightgon::wrench_angle_limit();
    else if (name == "wrench_angle_deg") {
        res = tightgon::wrench_angle_limit();
        res.name = "wrench_angle_deg";
        res.value *= 180.0 / M_PI;
        res.error_estimate *= 180.0 / M_PI;
    } else {
        res = custom ? tightgon::constant(name, cfg) : tightgon::constant(name);
    }

    ordered_json out;
    out["name"] = res.name;
    out["value"] = res.value;
    out["error_estimate"] = res.error_estimate;
    out["truncation"] = {{"taylor_order", res.truncation.taylor_order},
                         {"cutoff_M", res.truncation.cutoff_M},
                         {"zeta_terms", res.truncation.zeta_terms}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

tightgon::Sequence parse_sequence(const std::string& s) {
    if (s == "consecutive-up")
        return tightgon::Sequence::consecutive_up;
    if (s == "consecutive-down")
        return tightgon::Sequence::consecutive_down;
    if (s == "primes-up")
        return tightgon::Sequence::primes_up;
    if (s == "primes-down")
        return tightgon::Sequence::primes_down;
    throw std::domain_error("unknown sequence: " + s);
}

int cmd_figure(const std::string& sequence, int start, int end, const std::string& mode,
               const std::vector<int>& pair, const std::string& preset,
               const std::string& out_path, int canvas, double stroke_width) {
    tightgon::RenderSpec render;
    render.canvas_size = canvas;
    render.stroke_width = stroke_width;

    if (!preset.empty()) {
        const auto constraints = tightgon::preset_constraints(preset);
        const int n = preset[0] - '0';
        const int m = preset[2] - '0';
        const auto sol = tightgon::solve_translated(n, m, constraints);
        render.polygons.emplace_back(n, 1.0);
        render.polygons.emplace_back(m, sol.ratio, 0.0,
                                     tightgon::Point2(sol.shift * sol.ratio, 0.0));
    } else if (!pair.empty()) {
        const int n = pair.at(0), m = pair.at(1);
        render.polygons.emplace_back(n, 1.0);
        if (mode == "rotated") {
            const auto sol = tightgon::tight_rotated(n, m);
            render.polygons.emplace_back(m, sol.base.ratio, sol.alpha);
        } else {
            render.polygons.emplace_back(m, tightgon::tight_standard(n, m).ratio);
        }
    } else {
        tightgon::CascadeSpec spec;
        spec.sequence = parse_sequence(sequence);
        spec.start = start;
        spec.end = end;
        spec.mode = mode == "rotated" ? tightgon::NestMode::rotated
                                      : tightgon::NestMode::standard;
        const auto result = tightgon::cascade(spec);
        double radius = 1.0, angle = 0.0;
        render.polygons.emplace_back(result.sides.at(0), radius, angle);
        for (size_t i = 0; i + 1 < result.sides.size(); ++i) {
            radius *= result.ratios[i];
            angle += result.angles[i];
            render.polygons.emplace_back(result.sides[i + 1], radius, angle);
        }
    }

    std::ofstream file(out_path);
    if (!file)
        return kExitIo;
    file << tightgon::render_svg(render);
    file.close();
    if (!file)
        return kExitIo;
    return kExitOk;
}

int cmd_validate(int max_n, const std::string& mode) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    int discrepancies = 0;
    if (mode == "oracle") {
        double worst = 0.0;
        for (int n = 3; n <= max_n; ++n) {
            for (int m = 3; m <= max_n; ++m) {
                const double f_std = tightgon::tight_standard(n, m).ratio;
                const double o_std = tightgon::oracle_min_ratio(n, m, 0.0);
                const auto rot = tightgon::tight_rotated(n, m);
                const double o_rot = tightgon::oracle_min_ratio(n, m, rot.alpha);
                const double dev =
                    std::max(std::abs(f_std - o_std), std::abs(rot.base.ratio - o_rot));
                worst = std::max(worst, dev);
                if (dev > 1e-9) {
                    ++discrepancies;
                    std::printf("oracle mismatch n=%d m=%d dev=%.3e\n", n, m, dev);
                }
            }
        }
        std::printf("oracle check up to %d: max deviation %.3e, %d discrepancies\n",
                    max_n, worst, discrepancies);
    } else if (mode == "heuristic") {
        for (int n = 3; n <= max_n; ++n) {
            for (int m = 3; m <= max_n; ++m) {
                const auto search = tightgon::search_rotation(n, m);
                if (std::abs(search.best_ratio - search.heuristic_ratio) > 1e-10) {
                    ++discrepancies;
                    std::printf("rotation heuristic mismatch n=%d m=%d best_s=%d "
                                "best=%.12f heuristic=%.12f\n",
                                n, m, search.best_s, search.best_ratio,
                                search.heuristic_ratio);
                }
            }
        }
        std::printf("rotation-code search up to %d: %d discrepancies\n", max_n,
                    discrepancies);
    } else {
        throw std::domain_error("unknown validate mode: " + mode);
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("elapsed %.2f s\n", secs);
    return discrepancies == 0 ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tight circumscription of regular polygons: ratios, cascades, constants"};
    app.require_subcommand(1);

    auto* ratio = app.add_subcommand("ratio", "tight ratio for one polygon pair (JSON)");
    int rn = 3, rm = 3;
    std::string rmode = "standard", rpreset;
    ratio->add_option("--n", rn, "inner side count")->required();
    ratio->add_option("--m", rm, "outer side count")->required();
    ratio->add_option("--mode", rmode)->check(CLI::IsMember({"standard", "rotated"}));
    ratio->add_option("--translate-preset", rpreset, "translated-center preset");

    auto* table = app.add_subcommand("table", "grid of tight ratios (CSV)");
    std::string rows = "3..10", cols = "3..10", tmode = "standard";
    int digits = 8;
    table->add_option("--rows", rows);
    table->add_option("--cols", cols);
    table->add_option("--mode", tmode)->check(CLI::IsMember({"standard", "rotated"}));
    table->add_option("--digits", digits)->check(CLI::Range(1, 15));

    auto* primes = app.add_subcommand("primes", "adjacent-prime contact table (CSV)");
    int p_max = 73;
    primes->add_option("--max", p_max, "largest prime");

    auto* cconst = app.add_subcommand("constant", "named constant (JSON)");
    std::string cname;
    std::optional<int> corder, ccut;
    cconst->add_option("--name", cname)->required();
    cconst->add_option("--taylor-order", corder);
    cconst->add_option("--cutoff", ccut);

    auto* figure = app.add_subcommand("figure", "render nested polygons as SVG");
    std::string fsequence = "consecutive-up", fmode = "standard", fpreset, fout;
    int fstart = 3, fend = 16, fcanvas = 800;
    double fstroke = 1.0;
    std::vector<int> fpair;
    figure->add_option("--sequence", fsequence);
    figure->add_option("--start", fstart);
    figure->add_option("--end", fend);
    figure->add_option("--mode", fmode)->check(CLI::IsMember({"standard", "rotated"}));
    figure->add_option("--pair", fpair, "single pair: inner outer")->expected(2);
    figure->add_option("--translate-preset", fpreset);
    figure->add_option("--out", fout)->required();
    figure->add_option("--canvas", fcanvas);
    figure->add_option("--stroke-width", fstroke);

    auto* validate = app.add_subcommand("validate", "heuristic / oracle validation campaign");
    int vmax = 44;
    std::string vmode = "heuristic";
    validate->add_option("--max-n", vmax)->check(CLI::Range(3, 2000));
    validate->add_option("--mode", vmode)->check(CLI::IsMember({"heuristic", "oracle"}));

    try {
        app.parse(argc, argv);
        if (ratio->parsed())
            return cmd_ratio(rn, rm, rmode, rpreset);
        if (table->parsed())
            return cmd_table(parse_range(rows), parse_range(cols), tmode, digits);
        if (primes->parsed())
            return cmd_primes(p_max);
        if (cconst->parsed())
            return cmd_constant(cname, corder, ccut);
        if (figure->parsed())
            return cmd_figure(fsequence, fstart, fend, fmode, fpair, fpreset, fout,
                              fcanvas, fstroke);
        if (validate->parsed())
            return cmd_validate(vmax, vmode);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)  // --help
            return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownName;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitBadInput;
}

// Command-line driver: exact bound derivations, point evaluations of the
// divisor/zeta error terms, cached |zeta|^2 grids, and mixed-moment fits.

#include "zetalab/bounds.hpp"
#include "zetalab/cache.hpp"
#include "zetalab/divisor.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmtg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string sha256_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for hashing: " + p.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

void update_manifest(const fs::path& cache_dir, const std::string& filename, json params) {
    const fs::path manifest = cache_dir / "manifest.json";
    json m = json::object();
    if (fs::exists(manifest)) {
        std::ifstream in(manifest);
        in >> m;
    }
    params["sha256"] = sha256_file(cache_dir / filename);
    m[filename] = std::move(params);
    std::ofstream out(manifest, std::ios::trunc);
    out << m.dump(2) << '\n';
}

struct GlobalOpts {
    std::string cache_dir = "cache";
    int threads = 0;
    std::string theta = "131/416";
    std::string zeta_exponent = "32/205";

    zetalab::FactDatabase database() const {
        zetalab::FactDatabase db;
        db.set_theta(zetalab::parse_rational(theta));
        if (zeta_exponent == "32/205")
            db.set_zeta_pointwise(zetalab::ZetaPointwise::classic_32_205);
        else if (zeta_exponent == "53/342")
            db.set_zeta_pointwise(zetalab::ZetaPointwise::bourgain_53_342);
        else
            throw CLI::ValidationError("--zeta-exponent must be 32/205 or 53/342");
        return db;
    }
};

// Build the |zeta|^2 grid, reusing a cache file when present.  A corrupt or
// mismatched file is an error, never silently rebuilt.
zetalab::SampleGrid grid_cached(const GlobalOpts& g, double t0, double t1, double h,
                                bool* hit = nullptr, double auto_build_cap = 1.0e18) {
    fs::create_directories(g.cache_dir);
    const std::string name = "grid_" + fmtg(t0) + "_" + fmtg(t1) + "_" + fmtg(h) + ".bin";
    const fs::path file = fs::path(g.cache_dir) / name;
    if (fs::exists(file)) {
        auto grid = zetalab::load_grid(file.string());
        if (grid.t0 != t0 || grid.t1 != t1 || grid.h != h)
            throw zetalab::cache::CacheError("cache: parameter mismatch in " + file.string());
        if (hit) *hit = true;
        return grid;
    }
    if ((t1 - t0) / h > auto_build_cap)
        throw std::runtime_error("grid cache not found for this range; build it first with: "
                                 "zetalab compute grid --t0 " + fmtg(t0) + " --t1 " + fmtg(t1) +
                                 " --step " + fmtg(h));
    auto grid = zetalab::sample_critical_line(t0, t1, h, g.threads);
    zetalab::save_grid(grid, file.string());
    update_manifest(g.cache_dir, name,
                    json{{"kind", "grid"}, {"t0", t0}, {"t1", t1}, {"h", h}});
    if (hit) *hit = false;
    return grid;
}

void print_bound(int k, int m, const zetalab::FactDatabase& db, unsigned denom,
                 bool use_a0, bool as_json) {
    const auto d = zetalab::derive_mixed_bound(k, m, db, denom, use_a0);
    if (as_json) {
        std::cout << zetalab::derivation_to_json(d) << '\n';
        return;
    }
    std::cout << zetalab::render_derivation(d);
    std::cout << "  trivial:     " << zetalab::to_string(zetalab::trivial_bound(k, m, db))
              << '\n';
    std::cout << "  conjectural: " << zetalab::to_string(zetalab::conjectural_exponent(k, m))
              << "  (assumes the 1/4 exponent and the Lindeloef Hypothesis)\n";
}

void print_bound_table(int max_k, int max_m, const zetalab::FactDatabase& db, unsigned denom,
                       bool use_a0) {
    std::printf("%3s %3s  %-12s %-12s %-12s %s\n", "k", "m", "derived", "trivial",
                "conjectural", "decimal");
    for (int k = 1; k <= max_k; ++k) {
        for (int m = 1; m <= max_m; ++m) {
            const auto d = zetalab::derive_mixed_bound(k, m, db, denom, use_a0);
            const auto triv = zetalab::trivial_bound(k, m, db);
            const auto conj = zetalab::conjectural_exponent(k, m);
            std::printf("%3d %3d  %-12s %-12s %-12s %s%s\n", k, m,
                        zetalab::to_string(d.result.growth).c_str(),
                        zetalab::to_string(triv).c_str(), zetalab::to_string(conj).c_str(),
                        zetalab::to_decimal_string(d.result.growth, 8).c_str(),
                        d.conditional ? "  [conditional]" : "");
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed moments of the divisor error term and zeta on the critical line"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.set_config("--config")->description("flat key=value config file");
    app.add_option("--cache-dir", g.cache_dir, "cache directory")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    app.add_option("--theta", g.theta, "pointwise exponent for Delta (rational)")
        ->capture_default_str();
    app.add_option("--zeta-exponent", g.zeta_exponent,
                   "pointwise exponent for zeta: 32/205 or 53/342")
        ->capture_default_str();

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "derive exact-rational upper bounds");
    int bk = 0, bm = 0, max_k = 8, max_m = 3;
    unsigned denom = 64;
    bool table = false, bjson = false, constants = false;
    std::string a0;
    bounds->add_option("-k", bk, "power of Delta");
    bounds->add_option("-m", bm, "power of |zeta|^2");
    bounds->add_flag("--table", table, "tabulate k = 1..max-k, m = 1..max-m");
    bounds->add_option("--max-k", max_k)->capture_default_str();
    bounds->add_option("--max-m", max_m)->capture_default_str();
    bounds->add_option("--weight-denom", denom, "Hoelder weight denominator cap")
        ->capture_default_str();
    bounds->add_option("--a0", a0, "hypothetical moment exponent A0 in (8, 262/27)");
    bounds->add_flag("--json", bjson, "machine-readable output");
    bounds->add_flag("--constants", constants, "print the fact database and exit");

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "point values and sample grids");
    auto* cdelta = compute->add_subcommand("delta", "divisor error terms at given x");
    std::vector<double> xs;
    bool circle = false;
    std::uint64_t sieve_n = 0;
    cdelta->add_option("--x", xs, "evaluation points");
    cdelta->add_option("--N", sieve_n, "sieve and cache a divisor table up to N");
    cdelta->add_flag("--circle", circle, "also evaluate the circle-problem error P(x)");
    auto* czeta = compute->add_subcommand("zeta", "critical-line values at given t");
    std::vector<double> ts;
    czeta->add_option("--t", ts, "evaluation points")->required();
    auto* cgrid = compute->add_subcommand("grid", "build and cache a |zeta|^2 grid");
    double gt0 = 2.0, gt1 = 100.0, gh = 0.01;
    cgrid->add_option("--t0", gt0)->capture_default_str();
    cgrid->add_option("--t1", gt1)->required();
    cgrid->add_option("--step", gh)->capture_default_str();
    compute->require_subcommand(1);

    // ---- moment ----
    auto* moment = app.add_subcommand("moment", "mixed moment integrals and growth fits");
    int mk = 0, mm = 0;
    std::vector<double> mT;
    double mt0 = 2.0, mh = 0.01;
    std::string csv_path, json_path;
    moment->add_option("-k", mk, "power of Delta")->required();
    moment->add_option("-m", mm, "power of |zeta|^2")->required();
    moment->add_option("--T", mT, "fit endpoints (ascending)")->required();
    moment->add_option("--t0", mt0, "grid start")->capture_default_str();
    moment->add_option("--step", mh, "grid step")->capture_default_str();
    moment->add_option("--csv", csv_path, "write the point table to this file");
    moment->add_option("--json", json_path, "write the full report to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        auto db2 = g.database();
        bool use_a0 = false;
        if (bounds->parsed() && !a0.empty()) {
            db2.set_a0_hypothesis(zetalab::parse_rational(a0));
            use_a0 = true;
        }

        if (bounds->parsed()) {
            if (constants) {
                std::cout << db2.dump_constants();
            } else if (table) {
                print_bound_table(max_k, max_m, db2, denom, use_a0);
            } else {
                if (bk < 1 || bm < 1)
                    throw CLI::ValidationError("bounds: need -k and -m (or --table)");
                print_bound(bk, bm, db2, denom, use_a0, bjson);
            }
        } else if (cdelta->parsed()) {
            if (xs.empty() && sieve_n == 0)
                throw CLI::ValidationError("compute delta: need --x and/or --N");
            if (sieve_n > 0) {
                fs::create_directories(g.cache_dir);
                const std::string name = "divisor_" + std::to_string(sieve_n) + ".bin";
                const fs::path file = fs::path(g.cache_dir) / name;
                if (fs::exists(file)) {
                    auto tab = zetalab::DivisorTable::load(file);  // validates the format
                    std::cout << "cache hit: divisor table to " << tab.limit() << '\n';
                } else {
                    auto tab = zetalab::DivisorTable::sieve(
                        sieve_n, g.threads > 0 ? static_cast<unsigned>(g.threads) : 0u);
                    tab.save(file);
                    update_manifest(g.cache_dir, name,
                                    json{{"kind", "divisor"}, {"N", sieve_n}});
                    std::cout << "built: divisor table to " << sieve_n << '\n';
                }
            }
            if (xs.empty()) return 0;
            zetalab::HyperbolaDeltaSource src(4.0 * *std::max_element(xs.begin(), xs.end()) + 8);
            std::cout << "x,Delta,Delta_star" << (circle ? ",P" : "") << '\n';
            std::optional<zetalab::TwoSquaresTable> r2;
            if (circle) {
                const double mx = *std::max_element(xs.begin(), xs.end());
                r2 = zetalab::TwoSquaresTable::build(static_cast<std::uint64_t>(mx) + 1);
            }
            for (double x : xs) {
                const double d = src.delta_at(x);
                const double ds =
                    -src.delta_at(x) + 2.0 * src.delta_at(2.0 * x) - 0.5 * src.delta_at(4.0 * x);
                std::cout << fmt17(x) << ',' << fmt17(d) << ',' << fmt17(ds);
                if (circle) std::cout << ',' << fmt17(zetalab::circle_error(x, *r2));
                std::cout << '\n';
            }
        } else if (czeta->parsed()) {
            std::cout << "t,abs_rs,abs_em,re_em,im_em\n";
            for (double t : ts) {
                std::cout << fmt17(t) << ',';
                std::cout << (t >= 10.0 ? fmt17(zetalab::zeta_half_rs(t)) : "");
                if (t <= zetalab::kEmMaxT) {
                    const auto z = zetalab::zeta_half_em(t);
                    std::cout << ',' << fmt17(std::abs(z)) << ',' << fmt17(z.real()) << ','
                              << fmt17(z.imag());
                } else {
                    std::cout << ",,,";
                }
                std::cout << '\n';
            }
        } else if (cgrid->parsed()) {
            bool hit = false;
            const auto grid = grid_cached(g, gt0, gt1, gh, &hit);
            std::cout << (hit ? "cache hit: " : "built: ") << grid.size() << " samples on ["
                      << fmtg(gt0) << ", " << fmtg(gt1) << "], h = " << fmtg(gh) << '\n';
        } else if (moment->parsed()) {
            if (mT.empty()) throw CLI::ValidationError("moment: --T needs at least one point");
            const double maxT = *std::max_element(mT.begin(), mT.end());
            // small grids are built on the fly; anything bigger must already
            // be cached via `compute grid`
            const auto grid = grid_cached(g, mt0, maxT, mh, nullptr, 2.0e7);
            zetalab::HyperbolaDeltaSource src(maxT + 8);
            zetalab::MomentRequest req{mk, mm, mT};
            const auto rep = zetalab::compare_with_bounds(grid, req, src, db2);
            const std::string csv = zetalab::report_to_csv(rep);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path, std::ios::trunc | std::ios::binary);
                out << csv;
            } else {
                std::cout << csv;
            }
            if (!json_path.empty()) {
                std::ofstream out(json_path, std::ios::trunc | std::ios::binary);
                out << zetalab::report_to_json(rep) << '\n';
            }
            std::cout << "slope " << fmt17(rep.fit.slope) << " over " << rep.fit.points_used
                      << " points; derived " << fmt17(rep.derived_exponent) << " ("
                      << rep.derived_label << "), trivial " << fmt17(rep.trivial_exponent)
                      << ", conjectural " << fmt17(rep.conjectural) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

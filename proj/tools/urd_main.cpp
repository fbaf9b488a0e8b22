// urd — build, search, and verify uniformly resolvable path decompositions.
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <urd/atlas.hpp>
#include <urd/certificate.hpp>
#include <urd/compose.hpp>
#include <urd/ingredients.hpp>
#include <urd/model.hpp>
#include <urd/search.hpp>
#include <urd/solver.hpp>
#include <urd/spectrum.hpp>
#include <urd/verify.hpp>

namespace fs = std::filesystem;
using namespace urd;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitSpectrum = 2;
constexpr int kExitInternal = 3;
constexpr int kExitBudget = 4;
constexpr int kExitUsage = 64;

std::string default_cache_dir() {
    if (const char* env = std::getenv("URD_CACHE_DIR")) return env;
    fs::path probe = fs::current_path();
    for (int depth = 0; depth < 5; ++depth) {
        fs::path candidate = probe / "data" / "cache";
        if (fs::exists(candidate)) return candidate.string();
        if (!probe.has_parent_path() || probe.parent_path() == probe) break;
        probe = probe.parent_path();
    }
    return (fs::current_path() / "data" / "cache").string();
}

void emit(const Design& d, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        std::cout << certificate::to_json(d);
    else
        certificate::save(d, out_path);
}

std::map<std::string, std::string> parse_params(const std::string& params) {
    std::map<std::string, std::string> out;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("params", "expected key=value");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int param_int(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw CLI::ValidationError("params", "missing " + key);
    return std::stoi(it->second);
}

struct SelftestResult {
    int total = 0;
    int failed = 0;
};

SelftestResult run_selftest(solver::Builder& builder, int max_v, const std::string& out_dir,
                            int jobs, bool json) {
    struct Item {
        int v;
        Profile p;
    };
    std::vector<Item> items;
    for (int v = 12; v <= max_v; v += 12)
        for (const Profile& p : spectrum::d_of(v)) items.push_back({v, p});

    std::vector<std::string> failures(items.size());
    std::vector<std::string> certs(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                Design d = builder.build_urd(items[i].v, items[i].p);
                auto report = verify::verify_design(d);
                if (!report.valid())
                    failures[i] = "verifier rejected: " + report.summary(3);
                else if (!out_dir.empty())
                    certs[i] = certificate::to_json(d);
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::max(1, jobs);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (certs[i].empty()) continue;
            const auto& it = items[i];
            std::ofstream out(fs::path(out_dir) /
                              ("urd-v" + std::to_string(it.v) + "-r" + std::to_string(it.p.r) +
                               "-s" + std::to_string(it.p.s) + "-t" + std::to_string(it.p.t) +
                               ".json"));
            out << certs[i];
        }
    }

    SelftestResult result;
    std::map<int, std::pair<int, int>> by_v; // v -> (ok, total)
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto& [ok, total] = by_v[items[i].v];
        total++;
        result.total++;
        if (failures[i].empty())
            ok++;
        else
            result.failed++;
    }
    if (json) {
        nlohmann::ordered_json j;
        j["total"] = result.total;
        j["failed"] = result.failed;
        for (const auto& [v, counts] : by_v)
            j["by_v"][std::to_string(v)] = {{"ok", counts.first}, {"total", counts.second}};
        std::cout << j.dump(1, ' ') << "\n";
    } else {
        std::cout << "   v  triples      ok\n";
        for (const auto& [v, counts] : by_v)
            std::cout << std::setw(4) << v << std::setw(9) << counts.second << std::setw(8)
                      << counts.first << (counts.first == counts.second ? "" : "  FAIL") << "\n";
    }
    for (std::size_t i = 0; i < items.size(); ++i)
        if (!failures[i].empty())
            std::cerr << "FAIL v=" << items[i].v << " " << items[i].p.str() << ": "
                      << failures[i] << "\n";
    return result;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniformly resolvable P2/P3/P4 decompositions of K_v"};
    app.require_subcommand(1);
    std::string cache_dir = default_cache_dir();
    app.add_option("--cache", cache_dir, "certificate cache directory")->capture_default_str();

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "print the admissible profile set D(v)");
    int spectrum_v = 0;
    bool spectrum_json = false;
    cmd_spectrum->add_option("--v", spectrum_v, "point count (multiple of 12)")->required();
    cmd_spectrum->add_flag("--json", spectrum_json, "JSON output");

    // build
    auto* cmd_build = app.add_subcommand("build", "build a URD(v; r,s,t) certificate");
    int build_v = 0;
    Profile build_p;
    std::string build_out;
    std::uint64_t build_seed = 1;
    cmd_build->add_option("--v", build_v, "point count")->required();
    cmd_build->add_option("-r", build_p.r, "perfect matching classes")->required();
    cmd_build->add_option("-s", build_p.s, "P3 classes")->required();
    cmd_build->add_option("-t", build_p.t, "P4 classes")->required();
    cmd_build->add_option("--out", build_out, "output path (default stdout)");
    cmd_build->add_option("--seed", build_seed, "seed for cache regeneration");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a certificate file");
    std::string verify_path;
    bool verify_json = false;
    cmd_verify->add_option("file", verify_path, "certificate path")->required();
    cmd_verify->add_flag("--json-report", verify_json, "JSON violation report");

    // ingredient
    auto* cmd_ingredient = app.add_subcommand("ingredient", "emit an ingredient design");
    std::string ing_id, ing_family, ing_params, ing_out, ing_atlas_dir;
    cmd_ingredient->add_option("--id", ing_id, "atlas entry id");
    cmd_ingredient->add_option("--dump-atlas", ing_atlas_dir,
                               "serialize every atlas entry to this directory");
    cmd_ingredient->add_option("--family", ing_family,
                               "parameterized family (one-factorization, "
                               "near-one-factorization, bipartite-one-factorization, rgdd, "
                               "two-frame, p2c5)");
    cmd_ingredient->add_option("--params", ing_params, "family parameters, e.g. k=3,g=5,u=3");
    cmd_ingredient->add_option("--out", ing_out, "output path (default stdout)");

    // search
    auto* cmd_search = app.add_subcommand("search", "run the search oracle on a spec file");
    std::string search_spec_path, search_out;
    std::uint64_t search_seed = 0;
    std::int64_t search_budget = 0;
    cmd_search->add_option("--spec", search_spec_path, "SearchSpec JSON file")->required();
    cmd_search->add_option("--seed", search_seed, "override spec seed");
    cmd_search->add_option("--budget", search_budget, "override restart budget");
    cmd_search->add_option("--out", search_out, "output path (default stdout)");

    // selftest
    auto* cmd_selftest = app.add_subcommand(
        "selftest", "build and verify every profile of D(v) for all v up to --max-v");
    int selftest_maxv = 120;
    std::string selftest_out;
    int selftest_jobs = (int)std::thread::hardware_concurrency();
    bool selftest_json = false;
    cmd_selftest->add_option("--max-v", selftest_maxv, "largest v")->capture_default_str();
    cmd_selftest->add_option("--out", selftest_out, "write certificates to this directory");
    cmd_selftest->add_option("--jobs", selftest_jobs, "worker threads");
    cmd_selftest->add_flag("--json", selftest_json, "JSON summary");

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "time one build per construction route");

    // cache maintenance
    auto* cmd_cache = app.add_subcommand("cache", "search-cache maintenance");
    bool cache_list = false, cache_warm = false;
    std::string cache_only, cache_specs_dir;
    cmd_cache->add_flag("--list", cache_list, "list registry instances and cache status");
    cmd_cache->add_flag("--warm", cache_warm, "generate any missing cache entries");
    cmd_cache->add_option("--only", cache_only, "restrict --warm to one instance");
    cmd_cache->add_option("--dump-specs", cache_specs_dir,
                          "write every registry SearchSpec to this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_spectrum) {
            if (spectrum_v % 12 != 0 || spectrum_v <= 0) {
                std::cerr << "spectrum: v must be a positive multiple of 12\n";
                return kExitSpectrum;
            }
            const TripleSet dv = spectrum::d_of(spectrum_v);
            if (spectrum_json) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const Profile& p : dv)
                    arr.push_back({{"r", p.r}, {"s", p.s}, {"t", p.t}});
                std::cout << arr.dump(1, ' ') << "\n";
            } else {
                for (const Profile& p : dv)
                    std::cout << p.r << " " << p.s << " " << p.t << "\n";
            }
            return 0;
        }

        if (*cmd_build) {
            solver::Builder builder{search::Cache(cache_dir)};
            Design d = (build_v == 20 && build_p.s == 0 && build_p.t > 0)
                           ? builder.build_urd20(build_p)
                           : builder.build_urd(build_v, build_p);
            emit(d, build_out);
            return 0;
        }

        if (*cmd_verify) {
            // accept bare certificates and cache entries wrapping one
            std::ifstream in(verify_path, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open " + verify_path);
            std::ostringstream ss;
            ss << in.rdbuf();
            std::string text = ss.str();
            {
                auto doc = nlohmann::json::parse(text, nullptr, false);
                if (doc.is_object() && doc.contains("certificate"))
                    text = doc["certificate"].dump();
            }
            Design d = certificate::from_json(text);
            auto report = verify::verify_design(d);
            if (verify_json) {
                nlohmann::ordered_json j;
                j["valid"] = report.valid();
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& violation : report.violations)
                    arr.push_back({{"code", violation.code},
                                   {"message", violation.message},
                                   {"class_index", violation.class_index},
                                   {"block_index", violation.block_index}});
                j["violations"] = std::move(arr);
                std::cout << j.dump(1, ' ') << "\n";
            } else {
                std::cout << report.summary() << "\n";
            }
            return report.valid() ? 0 : kExitVerifyFail;
        }

        if (*cmd_ingredient) {
            if (!ing_atlas_dir.empty()) {
                fs::create_directories(ing_atlas_dir);
                for (const auto& id : atlas::ids())
                    certificate::save(atlas::get(id).design,
                                      (fs::path(ing_atlas_dir) / (id + ".json")).string());
                std::cout << atlas::ids().size() << " atlas entries written\n";
                return 0;
            }
            if (!ing_id.empty()) {
                emit(atlas::get(ing_id).design, ing_out);
                return 0;
            }
            if (ing_family.empty()) {
                std::cerr << "ingredient: need --id or --family\n";
                return kExitUsage;
            }
            const auto params = ing_params.empty() ? std::map<std::string, std::string>{}
                                                   : parse_params(ing_params);
            search::Cache cache(cache_dir);
            auto fetch = [&](const std::string& n) { return cache.get_by_name(n); };
            Design d;
            if (ing_family == "one-factorization")
                d = ingredients::one_factorization(param_int(params, "n"));
            else if (ing_family == "near-one-factorization")
                d = ingredients::near_one_factorization(param_int(params, "u"));
            else if (ing_family == "bipartite-one-factorization")
                d = ingredients::bipartite_one_factorization(param_int(params, "n"));
            else if (ing_family == "rgdd")
                d = ingredients::rgdd(param_int(params, "k"), param_int(params, "g"),
                                      param_int(params, "u"), fetch);
            else if (ing_family == "two-frame")
                d = ingredients::two_frame(param_int(params, "u"), fetch);
            else if (ing_family == "p2c5") {
                const int s = param_int(params, "s"), t = param_int(params, "t");
                if (s == 8 && t == 0)
                    d = ingredients::p2c5_8_0();
                else if (s == 6 && t == 1)
                    d = atlas::get("p2c5-2x5-(6,1)").design;
                else if (s == 4 && t == 2)
                    d = atlas::get("p2c5-2x5-(4,2)").design;
                else
                    throw std::domain_error("p2c5 supports (s,t) in {(8,0),(6,1),(4,2)}");
            } else {
                std::cerr << "ingredient: unknown family " << ing_family << "\n";
                return kExitUsage;
            }
            emit(d, ing_out);
            return 0;
        }

        if (*cmd_search) {
            std::ifstream in(search_spec_path);
            if (!in) {
                std::cerr << "search: cannot open " << search_spec_path << "\n";
                return kExitUsage;
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            search::SearchSpec spec = search::spec_from_json(ss.str());
            if (search_seed != 0) spec.seed = search_seed;
            if (search_budget != 0) spec.budget.restarts = (int)search_budget;
            auto outcome = search::solve(spec);
            std::cerr << "search: " << outcome.restarts << " restart(s), " << outcome.nodes
                      << " nodes\n";
            if (!outcome.design) {
                std::cerr << "search: infeasible within budget\n";
                return kExitBudget;
            }
            search::Cache(cache_dir).put(spec, *outcome.design);
            emit(*outcome.design, search_out);
            return 0;
        }

        if (*cmd_selftest) {
            solver::Builder builder{search::Cache(cache_dir)};
            auto result =
                run_selftest(builder, selftest_maxv, selftest_out, selftest_jobs, selftest_json);
            return result.failed == 0 ? 0 : kExitVerifyFail;
        }

        if (*cmd_bench) {
            solver::Builder builder{search::Cache(cache_dir)};
            struct Case {
                const char* route;
                int v;
                Profile p;
            };
            const std::vector<Case> cases = {
                {"urd12", 12, {4, 3, 2}},        {"urd36-expand", 36, {12, 6, 10}},
                {"urd24k-expand", 96, {43, 30, 8}}, {"urd60-iset", 60, {6, 33, 6}},
                {"frame", 108, {19, 48, 16}},
            };
            for (const auto& c : cases) {
                const auto start = std::chrono::steady_clock::now();
                Design d = builder.build_urd(c.v, c.p);
                const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
                std::cout << c.route << ": v=" << c.v << " " << c.p.str() << " in " << ms
                          << " ms (" << d.classes.size() << " classes)\n";
            }
            return 0;
        }

        if (*cmd_cache) {
            search::Cache cache(cache_dir);
            if (!cache_specs_dir.empty()) {
                fs::create_directories(cache_specs_dir);
                for (const auto& spec : search::cited_specs())
                    std::ofstream(fs::path(cache_specs_dir) / (spec.name + ".json"))
                        << search::spec_to_json(spec);
                std::cout << search::cited_specs().size() << " spec files written\n";
                return 0;
            }
            if (cache_list) {
                for (const auto& spec : search::cited_specs())
                    std::cout << spec.name << ": "
                              << (cache.get(spec) ? "cached" : "missing") << "\n";
                return 0;
            }
            if (cache_warm) {
                for (const auto& spec : search::cited_specs()) {
                    if (!cache_only.empty() && spec.name != cache_only) continue;
                    if (cache.get(spec)) {
                        std::cout << spec.name << ": cached\n";
                        continue;
                    }
                    const auto start = std::chrono::steady_clock::now();
                    auto outcome = search::solve(spec);
                    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
                    if (!outcome.design) {
                        std::cerr << spec.name << ": budget exhausted after " << ms << " ms\n";
                        return kExitBudget;
                    }
                    cache.put(spec, *outcome.design);
                    std::cout << spec.name << ": generated in " << ms << " ms ("
                              << outcome.restarts << " restarts, " << outcome.nodes
                              << " nodes)\n";
                }
                return 0;
            }
            std::cerr << "cache: need --list or --warm\n";
            return kExitUsage;
        }
    } catch (const solver::SpectrumError& e) {
        std::cerr << "spectrum violation: " << e.what() << "\n";
        return kExitSpectrum;
    } catch (const solver::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

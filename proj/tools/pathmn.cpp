// pathmn: command-line front end for path power sums, atomic functions, characters and statistics.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pathmn/characters.hpp"
#include "pathmn/oracles.hpp"
#include "pathmn/ribbons.hpp"
#include "pathmn/statistics.hpp"

using namespace pathmn;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitMismatch = 4;

struct Options {
    std::string format = "human";
    bool longForm = false;
    int threads = 1;
};

void print_expansion(const SymExpansion& f, const Options& o) {
    if (o.format == "json") std::cout << to_json(f) << "\n";
    else if (o.format == "csv") std::cout << format_csv(f);
    else std::cout << format_human(f, o.longForm) << "\n";
}

void print_integer(const Int& v, const Options& o) {
    if (o.format == "json") std::cout << "{\"value\":\"" << v.get_str() << "\"}\n";
    else std::cout << v.get_str() << "\n";
}

void print_rational(const Rat& v, const Options& o) {
    if (o.format == "json") std::cout << "{\"value\":\"" << to_string(v) << "\"}\n";
    else std::cout << to_string(v) << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- oracle-check suites; each returns the number of mismatches and logs them to stderr ----

std::vector<PartialPermutation> packed_pairs(int k) {
    std::vector<PartialPermutation> out;
    for (int r = k; r <= 2 * k; ++r) {
        std::vector<int> I(k), J(k);
        std::function<void(int)> pickI, pickJ;
        auto used = [](const std::vector<int>& v, int len, int x) {
            for (int t = 0; t < len; ++t)
                if (v[t] == x) return true;
            return false;
        };
        pickJ = [&](int p) {
            if (p == k) {
                std::vector<char> hit(r + 1, 0);
                for (int x : I) hit[x] = 1;
                for (int x : J) hit[x] = 1;
                for (int v = 1; v <= r; ++v)
                    if (!hit[v]) return;
                out.push_back({r, I, J});
                return;
            }
            for (int x = 1; x <= r; ++x)
                if (!used(J, p, x)) {
                    J[p] = x;
                    pickJ(p + 1);
                }
        };
        // I increasing gives one representative per canonical form
        pickI = [&](int p) {
            if (p == k) {
                pickJ(0);
                return;
            }
            for (int x = (p ? I[p - 1] + 1 : 1); x <= r; ++x) {
                I[p] = x;
                pickI(p + 1);
            }
        };
        pickI(0);
    }
    return out;
}

long check_atomic(int maxN) {
    long bad = 0, count = 0;
    for (int k = 0; k <= 3; ++k)
        for (const auto& packed : packed_pairs(k))
            for (int n = std::max(packed.n, 1); n <= std::min(maxN, 7); ++n) {
                PartialPermutation pp = make_pp(n, packed.I, packed.J);
                SymExpansion fast = atomic_schur(pp);
                SymExpansion slow = power_to_schur(brute_atomic(pp));
                SymExpansion hybrid = atomic_schur_hybrid(pp);
                ++count;
                if (!(fast == slow) || !(fast == hybrid)) {
                    ++bad;
                    std::cerr << "atomic mismatch n=" << n << " pp=" << format_pp(pp) << "\n";
                }
            }
    std::cerr << "atomic: " << count << " pairs checked\n";
    return bad;
}

long check_words(int maxN) {
    long bad = 0, count = 0;
    for (int n = 0; n <= std::min(maxN, 5); ++n)
        for (const auto& mu : partitions_of(n)) {
            ++count;
            if (!(word_array_path_expansion(mu, n) == path_power_to_schur(mu))) {
                ++bad;
                std::cerr << "word-array mismatch mu=" << format_partition(mu) << "\n";
            }
        }
    std::cerr << "words: " << count << " partitions checked\n";
    return bad;
}

void for_each_composition(int n, const std::function<void(const Composition&)>& visit) {
    Composition cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            visit(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(n);
}

long check_alternant(int maxN) {
    long bad = 0, count = 0;
    for (int n = 0; n <= std::min(maxN, 6); ++n)
        for (const auto& lam : partitions_of(n))
            for_each_composition(n, [&](const Composition& alpha) {
                ++count;
                if (alternant_char(lam, alpha) != skew_mn({lam, {}}, alpha)) {
                    ++bad;
                    std::cerr << "alternant mismatch lam=" << format_partition(lam) << " alpha=" << format_partition(alpha) << "\n";
                }
            });
    std::cerr << "alternant: " << count << " pairs checked\n";
    return bad;
}

long check_stable(int maxN) {
    long bad = 0, count = 0;
    for (int d = 0; d <= std::min(maxN, 6); ++d)
        for (const auto& mu : partitions_of(d)) {
            if (!mu.empty() && mu.back() < 2) continue;
            for (int n = d; n <= d + 4; ++n) {
                ++count;
                if (!(stable_expansion(mu, n) == path_power_to_schur(pad_column(mu, n)))) {
                    ++bad;
                    std::cerr << "stable mismatch mu=" << format_partition(mu) << " n=" << n << "\n";
                }
            }
        }
    std::cerr << "stable: " << count << " cases checked\n";
    return bad;
}

long check_locality(int maxN) {
    long bad = 0, count = 0;
    for (int n = 1; n <= std::min(maxN, 7); ++n)
        for (int k = 0; k <= n - 1; ++k) {
            ++count;
            if (local_dimension(n, k) != lis_count_brute(n, k)) {
                ++bad;
                std::cerr << "locality mismatch n=" << n << " k=" << k << "\n";
            }
        }
    std::cerr << "locality: " << count << " cases checked\n";
    return bad;
}

long check_stats(int maxN) {
    long bad = 0, count = 0;
    for (const std::string name : {"exc", "maj"})
        for (int n = 1; n <= std::min(maxN, 6); ++n) {
            Statistic f = builtin(name, n);
            ClassFunction cf = symmetrize(f);
            std::map<Partition, std::pair<Rat, long>> avg;
            std::vector<int> w(n);
            for (int i = 0; i < n; ++i) w[i] = i + 1;
            do {
                std::vector<char> seen(n, 0);
                Partition cyc;
                for (int v = 0; v < n; ++v) {
                    if (seen[v]) continue;
                    int len = 0;
                    for (int u = v; !seen[u]; u = w[u] - 1) {
                        seen[u] = 1;
                        ++len;
                    }
                    cyc.push_back(len);
                }
                std::sort(cyc.begin(), cyc.end(), std::greater<int>());
                auto& slot = avg[cyc];
                slot.first += evaluate(f, w);
                ++slot.second;
            } while (std::next_permutation(w.begin(), w.end()));
            for (const auto& [mu, s] : avg) {
                ++count;
                if (class_eval(cf, mu) != s.first / Rat(s.second)) {
                    ++bad;
                    std::cerr << "statistic mismatch " << name << " n=" << n << " mu=" << format_partition(mu) << "\n";
                }
            }
        }
    std::cerr << "stats: " << count << " class values checked\n";
    return bad;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pathmn: path Murnaghan-Nakayama rule, atomic symmetric functions and statistic symmetrization"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_flag("--long", opt.longForm, "One term per line in human format");
    app.add_option("--threads", opt.threads, "Worker threads for table construction")->check(CLI::PositiveNumber);

    std::string muText, lamText, ppText, scope = "all", statArg, classText;
    int n = -1, moment = 1, maxN = 6, reps = 5, tableN = 0;
    std::string route = "path";
    bool variance = false, tilings = false;

    auto* cPath = app.add_subcommand("path-expand", "Schur expansion of the path power sum vec-p_mu");
    cPath->add_option("mu", muText, "Partition or composition, e.g. \"3,2,1\" or \"2^2 1^3\"")->required();
    cPath->add_flag("--tilings", tilings, "Also draw every monotonic tiling (stderr)");

    auto* cP = app.add_subcommand("p-expand", "Power-sum expansion of the path power sum vec-p_mu");
    cP->add_option("mu", muText, "Partition or composition")->required();

    auto* cAtomic = app.add_subcommand("atomic", "Schur expansion of A_{n,I,J}");
    cAtomic->add_option("--pp", ppText, "Partial permutation \"I->J\"")->required();
    cAtomic->add_option("--n", n, "Ambient size")->required();
    cAtomic->add_option("--route", route, "path | hybrid | brute")->check(CLI::IsMember({"path", "hybrid", "brute"}));

    auto* cChar = app.add_subcommand("char", "Character value chi^lambda([I,J])");
    cChar->add_option("lambda", lamText, "Partition of n")->required();
    cChar->add_option("--pp", ppText, "Partial permutation \"I->J\"")->required();
    cChar->add_option("--n", n, "Ambient size")->required();

    auto* cTable = app.add_subcommand("table", "Character table of S_n");
    cTable->add_option("n", tableN, "Degree")->required();

    auto* cStat = app.add_subcommand("stat", "Symmetrize a statistic (built-in exc/maj or a JSON file)");
    cStat->add_option("statistic", statArg, "exc, maj, or path to a statistic JSON file")->required();
    cStat->add_option("--n", n, "Ambient size for built-ins");
    cStat->add_option("--moment", moment, "Power of the statistic")->check(CLI::NonNegativeNumber);
    cStat->add_option("--class", classText, "Evaluate on the class of this cycle type instead");
    cStat->add_flag("--variance", variance, "With --class: variance of the statistic on the class");

    auto* cOracle = app.add_subcommand("oracle-check", "Cross-check fast rules against the brute-force oracles");
    cOracle->add_option("scope", scope, "all | atomic | words | alternant | stable | locality | stats")
        ->check(CLI::IsMember({"all", "atomic", "words", "alternant", "stable", "locality", "stats"}));
    cOracle->add_option("--max-n", maxN, "Largest n to check")->check(CLI::NonNegativeNumber);

    auto* cBench = app.add_subcommand("bench", "Time the hybrid rule against brute force");
    cBench->add_option("--pp", ppText, "Partial permutation \"I->J\"")->required();
    cBench->add_option("--n", n, "Ambient size")->required();
    cBench->add_option("--reps", reps, "Repetitions")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*cPath) {
            Partition mu = sort_partition(parse_parts(muText));
            if (tilings)
                enumerate_monotonic(mu, [](const MonotonicTiling& t) {
                    std::cerr << "type " << format_partition(t.type) << " depth " << format_partition(t.depth) << " sign "
                              << (t.sign > 0 ? "+1" : "-1") << "\n"
                              << render_tiling(t) << "\n";
                });
            print_expansion(path_power_to_schur(mu), opt);
        } else if (*cP) {
            print_expansion(path_power_in_p(parse_parts(muText)), opt);
        } else if (*cAtomic) {
            PartialPermutation pp = parse_pp(ppText, n);
            if (route == "brute") print_expansion(power_to_schur(brute_atomic(pp)), opt);
            else if (route == "hybrid") print_expansion(atomic_schur_hybrid(pp), opt);
            else print_expansion(atomic_schur(pp), opt);
        } else if (*cChar) {
            Partition lam = parse_partition(lamText);
            PartialPermutation pp = parse_pp(ppText, n);
            if (degree(lam) != n) throw ParseError("lambda must be a partition of n");
            print_integer(char_eval(lam, pp), opt);
        } else if (*cTable) {
            CharacterTable t = character_table(tableN, opt.threads);
            if (opt.format == "json") {
                nlohmann::ordered_json j;
                j["n"] = t.n;
                j["shapes"] = t.shapes;
                j["chi"] = nlohmann::ordered_json::array();
                for (const auto& row : t.chi) {
                    auto r = nlohmann::ordered_json::array();
                    for (const auto& v : row) r.push_back(v.get_str());
                    j["chi"].push_back(r);
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << table_csv(t);
            }
        } else if (*cStat) {
            Statistic f;
            if (statArg == "exc" || statArg == "maj") {
                if (n < 1) throw ParseError("--n is required for built-in statistics");
                f = builtin(statArg, n);
            } else {
                std::ifstream in(statArg);
                if (!in) throw ParseError("cannot open statistic file " + statArg);
                std::stringstream ss;
                ss << in.rdbuf();
                f = statistic_from_json(ss.str());
                if (n >= 1 && n != f.n) throw ParseError("--n disagrees with the statistic file");
            }
            if (!classText.empty()) {
                Partition mu = parse_partition(classText);
                if (degree(mu) != f.n) throw ParseError("--class must be a partition of n");
                Statistic g = stat_power(f, moment);
                if (variance) print_rational(variance_on_class(g, mu), opt);
                else print_rational(class_eval(symmetrize(g), mu), opt);
            } else {
                print_expansion(symmetrize(stat_power(f, moment)).schur, opt);
            }
        } else if (*cOracle) {
            long bad = 0;
            if (scope == "all" || scope == "alternant") bad += check_alternant(maxN);
            if (scope == "all" || scope == "words") bad += check_words(maxN);
            if (scope == "all" || scope == "stable") bad += check_stable(maxN);
            if (scope == "all" || scope == "atomic") bad += check_atomic(maxN);
            if (scope == "all" || scope == "locality") bad += check_locality(maxN);
            if (scope == "all" || scope == "stats") bad += check_stats(maxN);
            std::cout << (bad == 0 ? "oracle-check passed" : "oracle-check FAILED: " + std::to_string(bad) + " mismatches") << "\n";
            return bad == 0 ? 0 : kExitMismatch;
        } else if (*cBench) {
            PartialPermutation pp = parse_pp(ppText, n);
            double hybrid = 1e300;
            std::vector<Int> row;
            for (int r = 0; r < reps; ++r) {
                clear_ribbon_caches();
                auto t0 = std::chrono::steady_clock::now();
                row = char_row(pp);
                hybrid = std::min(hybrid, seconds_since(t0));
            }
            std::cout << "partitions: " << row.size() << "\n";
            std::cout << "hybrid_seconds: " << hybrid << "\n";
            if (n <= guard_limit(9)) {
                double brute = 1e300;
                SymExpansion b;
                for (int r = 0; r < reps; ++r) {
                    auto t0 = std::chrono::steady_clock::now();
                    b = brute_atomic(pp);
                    brute = std::min(brute, seconds_since(t0));
                }
                SymExpansion schur = power_to_schur(b);
                bool agree = true;
                auto shapes = partitions_of(n);
                for (size_t i = 0; i < shapes.size(); ++i) agree = agree && schur.coeff(shapes[i]) == Rat(row[i]);
                std::cout << "brute_seconds: " << brute << "\n";
                std::cout << "speedup: " << brute / hybrid << "\n";
                std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
                if (!agree) return kExitMismatch;
            } else {
                std::cout << "brute: skipped (n exceeds guard)\n";
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

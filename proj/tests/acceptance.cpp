// Acceptance suite: runs every top-level requirement once, printing one
// PASS/FAIL line per criterion. Exits nonzero when anything failed. All
// comparisons are exact; the only tolerance anywhere is the wall-clock
// bound in criterion 1.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "coev/commands.hpp"
#include "coev/json_io.hpp"
#include "coev/scheme.hpp"
#include "coev/verify.hpp"
#include "support/oracles.hpp"

using namespace coev;
using namespace coev::testing;

namespace {

const std::filesystem::path kRepoDir = COEV_REPO_DIR;

struct Harness {
    int failures = 0;
    int index = 0;

    void run(const std::string& title, const std::function<bool(std::string&)>& criterion) {
        ++index;
        std::string detail;
        bool ok = false;
        try {
            ok = criterion(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << title;
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

bool expect(bool condition, const std::string& message, std::string& detail) {
    if (!condition && detail.empty()) detail = message;
    return condition;
}

Measure load_fixture(const char* name, std::string* bytes_out = nullptr) {
    const auto text = read_file(kRepoDir / "fixtures" / name);
    if (bytes_out != nullptr) *bytes_out = text;
    return build_measure(parse_system_description(text));
}

}  // namespace

int main() {
    Harness harness;

    harness.run("multiplicativity equivalence sweep (n=1..4), count 2^n-1, under 10 s",
                [](std::string& detail) {
                    bool ok = true;
                    double n4_seconds = 0;
                    for (std::size_t n = 1; n <= 4; ++n) {
                        const TheoremReport report =
                            verify_multiplicativity_equivalence(make_space(n));
                        ok = expect(report.passed(), "violations at n=" + std::to_string(n),
                                    detail) && ok;
                        const std::uint64_t population =
                            (std::uint64_t{1} << (std::uint64_t{1} << n)) - 2;
                        ok = expect(report.coevents_examined == population,
                                    "population mismatch at n=" + std::to_string(n), detail) && ok;
                        ok = expect(report.counts.at("satisfying") == (std::uint64_t{1} << n) - 1,
                                    "satisfying count at n=" + std::to_string(n), detail) && ok;
                        if (n == 4) n4_seconds = report.elapsed.count();
                    }
                    ok = expect(n4_seconds < 10.0, "n=4 sweep too slow", detail) && ok;
                    char buffer[64];
                    std::snprintf(buffer, sizeof(buffer), "n=4 sweep took %.3f s", n4_seconds);
                    if (ok) detail = buffer;
                    return ok;
                });

    harness.run("homomorphism criterion sweep (n=1..4)", [](std::string& detail) {
        bool ok = true;
        for (std::size_t n = 1; n <= 4; ++n) {
            const TheoremReport report = verify_homomorphism_criterion(make_space(n));
            ok = expect(report.passed(), "violations at n=" + std::to_string(n), detail) && ok;
        }
        return ok;
    });

    harness.run("structural law sweeps (n=1..4)", [](std::string& detail) {
        bool ok = true;
        for (std::size_t n = 1; n <= 4; ++n) {
            const SpacePtr space = make_space(n);
            ok = expect(verify_additive_unital_laws(space).passed(),
                        "additive-unital law failed at n=" + std::to_string(n), detail) && ok;
            ok = expect(verify_disjunction_law(space).passed(),
                        "disjunction law failed at n=" + std::to_string(n), detail) && ok;
            ok = expect(verify_multiplicative_laws(space).passed(),
                        "multiplicative law failed at n=" + std::to_string(n), detail) && ok;
        }
        return ok;
    });

    harness.run("pinned modus-ponens counterexamples", [](std::string& detail) {
        const TheoremReport report = verify_mp_counterexamples(make_space(1), make_space(2));
        bool ok = expect(report.passed(), "fixture tables misanswered", detail);

        const CoEvent only_empty = CoEvent::from_table_string(make_space(1), "10");
        ok = expect(is_mp(only_empty) && !is_multiplicative(only_empty),
                    "first counterexample broke", detail) && ok;
        const CoEvent one_atom = CoEvent::from_table_string(make_space(2), "0100");
        ok = expect(is_mp(one_atom) && is_zero_preserving(one_atom) &&
                        !is_multiplicative(one_atom),
                    "second counterexample broke", detail) && ok;
        return ok;
    });

    harness.run("stone correspondence (n=1..4)", [](std::string& detail) {
        bool ok = true;
        for (std::size_t n = 1; n <= 4; ++n) {
            const TheoremReport report = verify_stone_correspondence(make_space(n));
            ok = expect(report.passed(), "mismatch at n=" + std::to_string(n), detail) && ok;
            ok = expect(report.counts.at("homomorphisms") == n,
                        "homomorphism count at n=" + std::to_string(n), detail) && ok;
        }
        return ok;
    });

    harness.run("classical recovery across 100 random measures (n<=8)", [](std::string& detail) {
        std::mt19937 rng(60601);
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const std::size_t n = 1 + (rng() % 8);
            const SpacePtr space = make_space(n);
            const ClassicalMeasure mu = random_classical_measure(rng, space);

            std::vector<CoEvent> expected;
            for (std::size_t i = 0; i < n; ++i) {
                if (mu.weights()[i] > 0) expected.push_back(classical_coevent(space, i));
            }
            const auto actual = minimal_coevents(Measure{mu});
            ok = expect(actual.size() == expected.size(),
                        "wrong co-event count on trial " + std::to_string(trial), detail) && ok;
            for (std::size_t i = 0; ok && i < actual.size(); ++i) {
                ok = expect(actual[i] == expected[i],
                            "wrong co-event on trial " + std::to_string(trial), detail);
            }

            const EquivalenceReport report = equivalence_report(Measure{mu});
            ok = expect(report.consistent, "inconsistent report on trial " + std::to_string(trial),
                        detail) && ok;
            for (const auto& item : report.items) {
                ok = expect(item.count == expected.size(),
                            "item " + item.id + " count on trial " + std::to_string(trial),
                            detail) && ok;
            }
        }
        return ok;
    });

    harness.run("interference fixture: one co-event on {h0,h2}, no classical world",
                [](std::string& detail) {
                    const Measure mu = load_fixture("interference3.json");
                    const SpacePtr space = mu.space();

                    const auto nulls = oracle_null_masks(
                        3, [&](EventMask m) { return mu.evaluate_mask(m); });
                    const auto expected = oracle_minimal_nonstymied(3, nulls);

                    const SchemeSolution solution = solve(mu);
                    bool ok = expect(masks_of(solution.minimal_supports) == expected,
                                     "solver disagrees with the subset oracle", detail);
                    ok = expect(solution.minimal_supports.size() == 1 &&
                                    solution.minimal_supports[0].mask() == 0b101,
                                "support is not {h0,h2}", detail) && ok;
                    ok = expect(solution.preclusive_homomorphism_histories.empty() &&
                                    !solution.classical_world_exists,
                                "a preclusive homomorphism appeared", detail) && ok;

                    const EquivalenceReport report = equivalence_report(mu);
                    for (const char* id : {"i", "iii", "v"}) {
                        ok = expect(!report.item(id).exists,
                                    std::string("item ") + id + " should be empty", detail) && ok;
                    }
                    ok = expect(report.item("viii").count == 1, "item viii should be a singleton",
                                detail) && ok;
                    ok = expect(report.consistent, "report inconsistent", detail) && ok;
                    return ok;
                });

    harness.run("solver equals the brute-force oracle on random quantum measures (n<=8)",
                [](std::string& detail) {
                    std::mt19937 rng(80808);
                    bool ok = true;
                    for (int trial = 0; trial < 60 && ok; ++trial) {
                        const std::size_t n = 1 + (rng() % 8);
                        const SpacePtr space = make_space(n);
                        const Measure mu = (trial % 2 == 0)
                                               ? Measure(random_rank1_measure(rng, space))
                                               : Measure(random_mixed_measure(rng, space));

                        const auto nulls = oracle_null_masks(
                            n, [&](EventMask m) { return mu.evaluate_mask(m); });
                        const auto expected = oracle_minimal_nonstymied(n, nulls);
                        const auto outputs = minimal_coevents(mu);

                        std::vector<EventMask> supports;
                        for (const CoEvent& phi : outputs) {
                            supports.push_back(support_of(phi).event().mask());
                        }
                        ok = expect(supports == expected,
                                    "solver/oracle mismatch on trial " + std::to_string(trial),
                                    detail) && ok;

                        const auto null_list = null_events(mu);
                        for (const CoEvent& phi : outputs) {
                            ok = expect(is_preclusive(phi, null_list) && is_multiplicative(phi) &&
                                            is_mp(phi) && is_unital(phi) && is_c1(phi),
                                        "predicate battery failed on trial " +
                                            std::to_string(trial),
                                        detail) && ok;
                        }

                        // Nothing preclusive and multiplicative sits strictly
                        // below an output in the refinement order.
                        const std::uint64_t count = space->event_count();
                        for (std::uint64_t g = 1; g < count && ok; ++g) {
                            if (oracle_stymied(static_cast<EventMask>(g), nulls)) continue;
                            const CoEvent psi = from_support(Event(space, static_cast<EventMask>(g)));
                            for (const CoEvent& phi : outputs) {
                                ok = expect(!(precedes(psi, phi) && !(psi == phi)),
                                            "a strictly smaller preclusive multiplicative "
                                            "co-event exists on trial " +
                                                std::to_string(trial),
                                            detail) && ok;
                            }
                        }
                    }
                    return ok;
                });

    harness.run("quadratic sum rule is exactly zero on all bundled quantum fixtures",
                [](std::string& detail) {
                    bool ok = true;
                    for (const char* name : {"interference3.json", "cancellation4.json"}) {
                        const Measure mu = load_fixture(name);
                        const std::size_t n = mu.space()->size();
                        const std::uint64_t count = mu.space()->event_count();
                        for (std::uint64_t a = 0; a < count && ok; ++a) {
                            const EventMask rest_a = static_cast<EventMask>((count - 1) ^ a);
                            for (EventMask b = rest_a;; b = (b - 1) & rest_a) {
                                const EventMask rest_b = rest_a & ~b;
                                for (EventMask c = rest_b;; c = (c - 1) & rest_b) {
                                    const EventMask am = static_cast<EventMask>(a);
                                    const Rational i2 =
                                        mu.evaluate_mask(am | b | c) - mu.evaluate_mask(am | b) -
                                        mu.evaluate_mask(b | c) - mu.evaluate_mask(am | c) +
                                        mu.evaluate_mask(am) + mu.evaluate_mask(b) +
                                        mu.evaluate_mask(c);
                                    ok = expect(i2 == 0,
                                                std::string("sum rule broke on ") + name, detail) &&
                                         ok;
                                    if (c == 0 || !ok) break;
                                }
                                if (b == 0 || !ok) break;
                            }
                        }
                        (void)n;
                    }
                    return ok;
                });

    harness.run("solve and verify emit byte-identical JSON across runs and thread counts",
                [](std::string& detail) {
                    bool ok = true;
                    for (const char* name : {"coin.json", "deterministic.json",
                                             "interference3.json", "cancellation4.json"}) {
                        std::vector<std::string> renders;
                        for (unsigned threads : {1u, 2u, 3u}) {
                            for (int repeat = 0; repeat < 2; ++repeat) {
                                std::ostringstream out, err;
                                CommandOptions options{CommandOptions::Format::Json, threads};
                                const int code =
                                    cmd_solve(kRepoDir / "fixtures" / name, options, out, err);
                                ok = expect(code == kExitOk,
                                            std::string("solve failed on ") + name, detail) && ok;
                                renders.push_back(out.str());
                            }
                        }
                        for (const auto& render : renders) {
                            ok = expect(render == renders.front(),
                                        std::string("solve output drifted on ") + name, detail) &&
                                 ok;
                        }
                    }

                    std::vector<std::string> verify_renders;
                    for (unsigned threads : {1u, 2u, 3u}) {
                        for (int repeat = 0; repeat < 2; ++repeat) {
                            std::ostringstream out, err;
                            CommandOptions options{CommandOptions::Format::Json, threads};
                            const int code = cmd_verify(4, options, out, err);
                            ok = expect(code == kExitOk, "verify failed", detail) && ok;
                            verify_renders.push_back(out.str());
                        }
                    }
                    for (const auto& render : verify_renders) {
                        ok = expect(render == verify_renders.front(), "verify output drifted",
                                    detail) && ok;
                    }
                    return ok;
                });

    std::cout << (harness.failures == 0 ? "all criteria passed"
                                        : std::to_string(harness.failures) + " criteria failed")
              << "\n";
    return harness.failures == 0 ? 0 : 1;
}

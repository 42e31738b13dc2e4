#include "coev/verify.hpp"

#include <algorithm>
#include <type_traits>

#include "coev/parallel.hpp"

namespace coev {

namespace {

using Clock = std::chrono::steady_clock;

CoEvent coevent_from_table_int(const SpacePtr& space, std::uint64_t t) {
    CoEventBuilder builder(space);
    const std::uint64_t events = space->event_count();
    for (std::uint64_t k = 0; k < events; ++k) {
        if ((t >> k) & 1u) builder.set(static_cast<EventMask>(k), true);
    }
    return builder.finish();
}

// Sweeps every non-constant table, merging per-chunk violations and counts
// in ascending table order so the result is canonical for any thread count.
template <typename PerCoEvent>
TheoremReport sweep(std::string id, const SpacePtr& space, unsigned threads, PerCoEvent&& check) {
    if (!space) throw std::invalid_argument("verify: null space");
    if (space->size() > kMaxCoeventEnumerationHistories) {
        throw CapacityError("co-event enumeration capped at " +
                            std::to_string(kMaxCoeventEnumerationHistories) + " histories");
    }
    const auto start = Clock::now();

    TheoremReport report;
    report.id = std::move(id);
    report.n = space->size();

    const std::uint64_t tables = std::uint64_t{1} << space->event_count();
    const unsigned n_chunks = resolve_threads(threads);
    std::vector<TheoremReport> partial(std::max(1u, n_chunks));

    for_each_chunk(1, tables - 1, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
        TheoremReport& local = partial[chunk];
        for (std::uint64_t t = lo; t < hi; ++t) {
            const CoEvent phi = coevent_from_table_int(space, t);
            if constexpr (std::is_invocable_v<PerCoEvent&, const CoEvent&, TheoremReport&,
                                              unsigned>) {
                check(phi, local, chunk);
            } else {
                check(phi, local);
            }
            ++local.coevents_examined;
        }
    });

    for (const TheoremReport& local : partial) {
        report.coevents_examined += local.coevents_examined;
        for (const auto& [key, value] : local.counts) report.counts[key] += value;
        report.violations.insert(report.violations.end(), local.violations.begin(),
                                 local.violations.end());
    }
    report.elapsed = Clock::now() - start;
    return report;
}

void violation(TheoremReport& report, const CoEvent& phi, std::string clause) {
    report.violations.push_back({phi.table_string(), std::move(clause)});
}

}  // namespace

std::vector<CoEvent> all_coevents(const SpacePtr& space) {
    std::vector<CoEvent> out;
    enumerate_coevents(space, [&](CoEvent phi) { out.push_back(std::move(phi)); });
    return out;
}

TheoremReport verify_multiplicativity_equivalence(const SpacePtr& space, unsigned threads) {
    return sweep("multiplicativity-equivalence", space, threads,
                 [](const CoEvent& phi, TheoremReport& report) {
                     const bool mp_unital = is_mp(phi) && is_unital(phi);
                     const bool filter = affirmed_is_filter(phi);
                     const bool multiplicative = is_multiplicative(phi);
                     if (mp_unital != filter) {
                         violation(report, phi,
                                   mp_unital ? "modus ponens and unital, yet the affirmed set is not a filter"
                                             : "affirmed set is a filter, yet not modus ponens and unital");
                     }
                     if (filter != multiplicative) {
                         violation(report, phi,
                                   filter ? "affirmed set is a filter, yet not multiplicative"
                                          : "multiplicative, yet the affirmed set is not a filter");
                     }
                     if (multiplicative) ++report.counts["satisfying"];
                 });
}

TheoremReport verify_homomorphism_criterion(const SpacePtr& space, unsigned threads) {
    return sweep("homomorphism-criterion", space, threads,
                 [](const CoEvent& phi, TheoremReport& report) {
                     const bool mp = is_mp(phi);
                     const bool c2 = is_c2(phi);
                     const bool hom = is_homomorphism(phi);
                     if (mp && c2 && is_unital(phi) && !hom) {
                         violation(report, phi, "unital, modus ponens and C2, yet not a homomorphism");
                     }
                     if (mp && c2 && is_zero_preserving(phi) && !hom) {
                         violation(report, phi,
                                   "zero-preserving, modus ponens and C2, yet not a homomorphism");
                     }
                     if (hom) {
                         ++report.counts["homomorphisms"];
                         if (!(is_unital(phi) && is_zero_preserving(phi) && mp && is_c1(phi) && c2)) {
                             violation(report, phi, "homomorphism breaking a classical rule");
                         }
                     }
                 });
}

TheoremReport verify_additive_unital_laws(const SpacePtr& space, unsigned threads) {
    return sweep("additive-unital-laws", space, threads,
                 [](const CoEvent& phi, TheoremReport& report) {
                     if (!(is_additive(phi) && is_unital(phi))) return;
                     ++report.counts["additive_unital"];
                     if (!is_zero_preserving(phi)) {
                         violation(report, phi, "additive and unital, yet not zero-preserving");
                     }
                     if (!is_c1(phi)) violation(report, phi, "additive and unital, yet not C1");
                     if (!is_c2(phi)) violation(report, phi, "additive and unital, yet not C2");
                 });
}

TheoremReport verify_disjunction_law(const SpacePtr& space, unsigned threads) {
    return sweep("disjunction-law", space, threads,
                 [](const CoEvent& phi, TheoremReport& report) {
                     if (!is_homomorphism(phi)) return;
                     ++report.counts["homomorphisms"];
                     const std::uint64_t count = phi.space()->event_count();
                     for (std::uint64_t a = 0; a < count; ++a) {
                         for (std::uint64_t b = 0; b <= a; ++b) {
                             const bool lhs = phi.value(static_cast<EventMask>(a | b));
                             const bool rhs = phi.value(static_cast<EventMask>(a)) ||
                                              phi.value(static_cast<EventMask>(b));
                             if (lhs != rhs) {
                                 violation(report, phi,
                                           "homomorphism answering a union unlike its members");
                                 return;
                             }
                         }
                     }
                 });
}

TheoremReport verify_multiplicative_laws(const SpacePtr& space, unsigned threads) {
    return sweep("multiplicative-laws", space, threads,
                 [](const CoEvent& phi, TheoremReport& report) {
                     if (!is_multiplicative(phi)) return;
                     ++report.counts["multiplicative"];
                     if (!is_zero_preserving(phi)) {
                         violation(report, phi, "multiplicative, yet not zero-preserving");
                     }
                     if (!is_c1(phi)) violation(report, phi, "multiplicative, yet not C1");
                 });
}

TheoremReport verify_stone_correspondence(const SpacePtr& space, unsigned threads) {
    std::vector<std::vector<std::string>> found_per_chunk(resolve_threads(threads));
    TheoremReport report = sweep("stone-correspondence", space, threads,
                                 [&](const CoEvent& phi, TheoremReport& local, unsigned chunk) {
                                     if (is_homomorphism(phi)) {
                                         ++local.counts["homomorphisms"];
                                         found_per_chunk[chunk].push_back(phi.table_string());
                                     }
                                 });

    std::vector<std::string> found;
    for (const auto& chunk : found_per_chunk) {
        found.insert(found.end(), chunk.begin(), chunk.end());
    }

    std::vector<std::string> expected;
    expected.reserve(space->size());
    for (std::size_t h = 0; h < space->size(); ++h) {
        expected.push_back(classical_coevent(space, h).table_string());
    }

    for (const std::string& table : found) {
        if (std::find(expected.begin(), expected.end(), table) == expected.end()) {
            report.violations.push_back({table, "homomorphism that is no history's co-event"});
        }
    }
    for (const std::string& table : expected) {
        if (std::find(found.begin(), found.end(), table) == found.end()) {
            report.violations.push_back({table, "history co-event missing from the homomorphisms"});
        }
    }
    return report;
}

TheoremReport verify_mp_counterexamples(const SpacePtr& one_history_space,
                                        const SpacePtr& two_history_space) {
    if (!one_history_space || one_history_space->size() != 1) {
        throw std::invalid_argument("first counterexample needs a one-history space");
    }
    if (!two_history_space || two_history_space->size() != 2) {
        throw std::invalid_argument("second counterexample needs a two-history space");
    }
    const auto start = Clock::now();

    TheoremReport report;
    report.id = "mp-counterexamples";
    report.n = 2;
    report.coevents_examined = 2;

    auto expect = [&](const CoEvent& phi, bool actual, bool wanted, const char* what) {
        if (actual != wanted) {
            violation(report, phi, std::string(what) + (wanted ? " expected" : " not expected"));
        }
    };

    // Affirms only the empty event. No affirmed implication pairs exist, so
    // modus ponens holds vacuously while multiplicativity fails.
    const CoEvent only_empty = CoEvent::from_table_string(one_history_space, "10");
    expect(only_empty, is_mp(only_empty), true, "modus ponens");
    expect(only_empty, is_multiplicative(only_empty), false, "multiplicativity");
    expect(only_empty, is_zero_preserving(only_empty), false, "zero-preservation");
    expect(only_empty, is_unital(only_empty), false, "unitality");

    // Affirms exactly one atom of the four-element algebra. Zero-preserving
    // and still vacuously modus ponens, but not multiplicative.
    const CoEvent one_atom = CoEvent::from_table_string(two_history_space, "0100");
    expect(one_atom, is_mp(one_atom), true, "modus ponens");
    expect(one_atom, is_zero_preserving(one_atom), true, "zero-preservation");
    expect(one_atom, is_multiplicative(one_atom), false, "multiplicativity");
    expect(one_atom, is_unital(one_atom), false, "unitality");

    report.elapsed = Clock::now() - start;
    return report;
}

std::vector<TheoremReport> verify_all(unsigned max_n, unsigned threads) {
    if (max_n < 1 || max_n > kMaxCoeventEnumerationHistories) {
        throw std::invalid_argument("max_n must be between 1 and " +
                                    std::to_string(kMaxCoeventEnumerationHistories));
    }
    std::vector<TheoremReport> reports;
    for (unsigned n = 1; n <= max_n; ++n) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (unsigned i = 0; i < n; ++i) labels.push_back("h" + std::to_string(i));
        const SpacePtr space = HistorySpace::make(std::move(labels));

        reports.push_back(verify_multiplicativity_equivalence(space, threads));
        reports.push_back(verify_homomorphism_criterion(space, threads));
        reports.push_back(verify_additive_unital_laws(space, threads));
        reports.push_back(verify_disjunction_law(space, threads));
        reports.push_back(verify_multiplicative_laws(space, threads));
        reports.push_back(verify_stone_correspondence(space, threads));
    }
    reports.push_back(verify_mp_counterexamples(HistorySpace::make({"h0"}),
                                                HistorySpace::make({"h0", "h1"})));
    return reports;
}

}  // namespace coev

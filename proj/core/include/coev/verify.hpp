#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coev/coevent.hpp"

namespace coev {

/// Whole-co-event-space sweeps enumerate 2^(2^n) - 2 truth tables; n = 5
/// would already be about 4.3e9 of them, so enumeration stops at 4.
inline constexpr std::size_t kMaxCoeventEnumerationHistories = 4;

struct CoEventViolation {
    std::string table;   // the offending truth table, mask-ascending
    std::string clause;  // which obligation it broke
};

/// Outcome of one exhaustive law check over a space. An empty violation list
/// means the law held for every enumerated co-event. `elapsed` is for human
/// display; serialized reports leave it out so identical inputs produce
/// byte-identical documents.
struct TheoremReport {
    std::string id;
    std::size_t n = 0;
    std::uint64_t coevents_examined = 0;
    std::map<std::string, std::uint64_t> counts;
    std::vector<CoEventViolation> violations;
    std::chrono::duration<double> elapsed{};

    bool passed() const { return violations.empty(); }
};

/// Calls fn(CoEvent) for every non-constant truth table, ascending
/// table-as-integer order (bit k of the integer answers event mask k).
template <typename Fn>
void enumerate_coevents(const SpacePtr& space, Fn&& fn) {
    if (!space) throw std::invalid_argument("enumerate_coevents: null space");
    if (space->size() > kMaxCoeventEnumerationHistories) {
        throw CapacityError("co-event enumeration capped at " +
                            std::to_string(kMaxCoeventEnumerationHistories) + " histories");
    }
    const std::uint64_t events = space->event_count();
    const std::uint64_t tables = std::uint64_t{1} << events;
    CoEventBuilder builder(space);
    for (std::uint64_t t = 1; t + 1 < tables; ++t) {
        builder.reset();
        for (std::uint64_t k = 0; k < events; ++k) {
            if ((t >> k) & 1u) builder.set(static_cast<EventMask>(k), true);
        }
        fn(builder.finish());
    }
}

std::vector<CoEvent> all_coevents(const SpacePtr& space);

/// Modus ponens plus unitality, a filter of affirmed events, and
/// multiplicativity single out the same co-events; checks the three-way
/// agreement on every co-event and counts the satisfying ones.
TheoremReport verify_multiplicativity_equivalence(const SpacePtr& space, unsigned threads = 0);

/// A unital (or zero-preserving) modus-ponens C2 co-event is a homomorphism,
/// and homomorphisms obey every classical rule.
TheoremReport verify_homomorphism_criterion(const SpacePtr& space, unsigned threads = 0);

/// Additive and unital forces zero-preserving, C1 and C2.
TheoremReport verify_additive_unital_laws(const SpacePtr& space, unsigned threads = 0);

/// A homomorphism affirms a union exactly when it affirms a member.
TheoremReport verify_disjunction_law(const SpacePtr& space, unsigned threads = 0);

/// Multiplicative forces zero-preserving and C1.
TheoremReport verify_multiplicative_laws(const SpacePtr& space, unsigned threads = 0);

/// The homomorphisms are exactly the single-history co-events, one each.
TheoremReport verify_stone_correspondence(const SpacePtr& space, unsigned threads = 0);

/// Two pinned counterexamples showing modus ponens alone — even with
/// zero-preservation — does not force multiplicativity.
TheoremReport verify_mp_counterexamples(const SpacePtr& one_history_space,
                                        const SpacePtr& two_history_space);

/// All checks for every space size from 1 to max_n (1..4), in a fixed order.
std::vector<TheoremReport> verify_all(unsigned max_n, unsigned threads = 0);

}  // namespace coev

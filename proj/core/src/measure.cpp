#include "coev/measure.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "coev/parallel.hpp"

namespace coev {

namespace {

// Coverage cutoffs for the validators. Above these the checks fall back to
// deterministic sampling and say so in the report.
constexpr std::size_t kExhaustiveAdditivityCap = 10;   // 3^n disjoint pairs
constexpr std::size_t kExhaustivePositivityCap = 16;   // 2^n events
constexpr std::size_t kExhaustiveSumRuleCap = 10;      // 4^n disjoint triples
constexpr unsigned kSampleCount = 2000;
constexpr unsigned kSampleSeed = 0x5eed;

std::string mask_to_string(const HistorySpace& space, EventMask mask) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if ((mask >> i) & 1u) {
            if (!first) out += ",";
            out += space.label(i);
            first = false;
        }
    }
    out += "}";
    return out;
}

}  // namespace

ClassicalMeasure::ClassicalMeasure(SpacePtr space, std::vector<Rational> weights, bool normalize)
    : space_(std::move(space)), weights_(std::move(weights)) {
    if (!space_) throw std::invalid_argument("measure needs a history space");
    if (weights_.size() != space_->size()) {
        throw std::invalid_argument("expected one weight per history (" +
                                    std::to_string(space_->size()) + "), got " +
                                    std::to_string(weights_.size()));
    }
    if (normalize) {
        Rational t = total();
        if (t != 0) {
            for (auto& w : weights_) w /= t;
        }
    }
}

Rational ClassicalMeasure::evaluate_mask(EventMask mask) const {
    Rational acc = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if ((mask >> i) & 1u) acc += weights_[i];
    }
    return acc;
}

Rational ClassicalMeasure::total() const { return evaluate_mask(space_->full_mask()); }

QuantumMeasure::QuantumMeasure(SpacePtr space, std::vector<std::vector<ComplexRational>> matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
    if (!space_) throw std::invalid_argument("measure needs a history space");
    const std::size_t n = space_->size();
    if (matrix_.size() != n) {
        throw std::invalid_argument("decoherence matrix must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
    }
    for (const auto& row : matrix_) {
        if (row.size() != n) {
            throw std::invalid_argument("decoherence matrix must be square");
        }
    }
}

QuantumMeasure QuantumMeasure::from_amplitudes(SpacePtr space,
                                               std::vector<ComplexRational> amplitudes,
                                               bool normalize) {
    if (!space) throw std::invalid_argument("measure needs a history space");
    const std::size_t n = space->size();
    if (amplitudes.size() != n) {
        throw std::invalid_argument("expected one amplitude per history (" + std::to_string(n) +
                                    "), got " + std::to_string(amplitudes.size()));
    }
    std::vector<std::vector<ComplexRational>> matrix(n, std::vector<ComplexRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            matrix[i][j] = amplitudes[i] * amplitudes[j].conj();
        }
    }
    return from_decoherence(std::move(space), std::move(matrix), normalize);
}

QuantumMeasure QuantumMeasure::from_decoherence(SpacePtr space,
                                                std::vector<std::vector<ComplexRational>> matrix,
                                                bool normalize) {
    QuantumMeasure mu(std::move(space), std::move(matrix));
    if (normalize) {
        Rational t = mu.total();
        if (t != 0) {
            Rational inv = 1 / t;
            for (auto& row : mu.matrix_) {
                for (auto& entry : row) entry = inv * entry;
            }
        }
    }
    return mu;
}

ComplexRational QuantumMeasure::evaluate_mask_full(EventMask mask) const {
    ComplexRational acc;
    const std::size_t n = space_->size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!((mask >> i) & 1u)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if ((mask >> j) & 1u) acc += matrix_[i][j];
        }
    }
    return acc;
}

Rational QuantumMeasure::evaluate_mask(EventMask mask) const {
    return evaluate_mask_full(mask).re;
}

Rational QuantumMeasure::total() const { return evaluate_mask(space_->full_mask()); }

const SpacePtr& Measure::space() const noexcept {
    return std::visit([](const auto& m) -> const SpacePtr& { return m.space(); }, value_);
}

Rational Measure::evaluate_mask(EventMask mask) const {
    return std::visit([mask](const auto& m) { return m.evaluate_mask(mask); }, value_);
}

Rational evaluate(const Measure& mu, const Event& a) {
    if (!same_space(mu.space(), a.space())) {
        throw SpaceMismatchError("event and measure belong to different history spaces");
    }
    return mu.evaluate_mask(a.mask());
}

namespace {

// Walks all 2^n masks in Gray-code order, keeping the measure value current
// with O(n) exact operations per step. fn(mask, value&) sees every mask once.
template <typename Value, typename Flip, typename Fn>
void gray_scan(std::uint64_t begin, std::uint64_t end, Value initial, Flip&& flip, Fn&& fn) {
    auto gray = [](std::uint64_t p) { return p ^ (p >> 1); };
    Value value = std::move(initial);  // value for gray(begin), caller-supplied
    for (std::uint64_t p = begin; p < end; ++p) {
        const EventMask mask = static_cast<EventMask>(gray(p));
        fn(mask, value);
        if (p + 1 < end) {
            const EventMask next = static_cast<EventMask>(gray(p + 1));
            const EventMask changed = mask ^ next;
            flip(value, mask, changed, (next & changed) != 0);
        }
    }
}

struct ClassicalScanOps {
    const ClassicalMeasure& mu;
    Rational at(EventMask mask) const { return mu.evaluate_mask(mask); }
    void flip(Rational& value, EventMask, EventMask changed, bool added) const {
        int bit = std::countr_zero(changed);
        if (added) {
            value += mu.weights()[bit];
        } else {
            value -= mu.weights()[bit];
        }
    }
    static bool is_null(const Rational& v) { return v == 0; }
};

struct QuantumScanOps {
    const QuantumMeasure& mu;
    ComplexRational at(EventMask mask) const { return mu.evaluate_mask_full(mask); }
    void flip(ComplexRational& value, EventMask current, EventMask changed, bool added) const {
        const int k = std::countr_zero(changed);
        const auto& matrix = mu.decoherence();
        // Cross terms against the members that stay put.
        const EventMask others = added ? current : (current ^ changed);
        ComplexRational delta = matrix[k][k];
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            if ((others >> j) & 1u) delta += matrix[k][j] + matrix[j][k];
        }
        if (added) {
            value += delta;
        } else {
            value = value - delta;
        }
    }
    static bool is_null(const ComplexRational& v) { return v.re == 0; }
};

template <typename Ops>
std::vector<EventMask> collect_null_masks(const Ops& ops, std::size_t n, unsigned threads) {
    const std::uint64_t count = std::uint64_t{1} << n;
    const unsigned n_chunks = resolve_threads(threads);
    std::vector<std::vector<EventMask>> per_chunk(std::max(1u, n_chunks));

    for_each_chunk(0, count, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
        auto& out = per_chunk[chunk];
        auto initial = ops.at(static_cast<EventMask>(lo ^ (lo >> 1)));
        gray_scan(lo, hi, std::move(initial),
                  [&](auto& value, EventMask current, EventMask changed, bool added) {
                      ops.flip(value, current, changed, added);
                  },
                  [&](EventMask mask, const auto& value) {
                      if (Ops::is_null(value)) out.push_back(mask);
                  });
    });

    std::vector<EventMask> nulls;
    for (const auto& chunk : per_chunk) {
        nulls.insert(nulls.end(), chunk.begin(), chunk.end());
    }
    std::sort(nulls.begin(), nulls.end());
    return nulls;
}

std::vector<EventMask> null_masks(const Measure& mu, unsigned threads) {
    const std::size_t n = mu.space()->size();
    if (n > kMaxNullEnumerationHistories) {
        throw CapacityError("null-event enumeration capped at " +
                            std::to_string(kMaxNullEnumerationHistories) + " histories");
    }
    if (mu.is_classical()) {
        return collect_null_masks(ClassicalScanOps{mu.classical()}, n, threads);
    }
    return collect_null_masks(QuantumScanOps{mu.quantum()}, n, threads);
}

std::vector<Event> wrap_masks(const SpacePtr& space, const std::vector<EventMask>& masks) {
    std::vector<Event> out;
    out.reserve(masks.size());
    for (EventMask m : masks) out.emplace_back(space, m);
    return out;
}

}  // namespace

std::vector<Event> null_events(const Measure& mu, unsigned threads) {
    return wrap_masks(mu.space(), null_masks(mu, threads));
}

namespace {

std::vector<EventMask> maximal_of(const std::vector<EventMask>& nulls, std::size_t n) {
    const std::uint64_t count = std::uint64_t{1} << n;

    // reach[m]: some null event contains m (possibly m itself). Filled from
    // the top of the lattice down; each mask only consults strict supersets.
    std::vector<std::uint8_t> is_null_flag(count, 0), reach(count, 0);
    for (EventMask m : nulls) is_null_flag[m] = 1;
    for (std::uint64_t m = count; m-- > 0;) {
        std::uint8_t r = is_null_flag[m];
        for (std::size_t i = 0; !r && i < n; ++i) {
            if (!((m >> i) & 1u)) r = reach[m | (std::uint64_t{1} << i)];
        }
        reach[m] = r;
    }

    std::vector<EventMask> maximal;
    for (EventMask m : nulls) {
        bool has_null_superset = false;
        for (std::size_t i = 0; !has_null_superset && i < n; ++i) {
            if (!((m >> i) & 1u)) has_null_superset = reach[m | (EventMask{1} << i)];
        }
        if (!has_null_superset) maximal.push_back(m);
    }
    return maximal;
}

}  // namespace

std::vector<Event> maximal_null_events(const Measure& mu, unsigned threads) {
    return wrap_masks(mu.space(), maximal_of(null_masks(mu, threads), mu.space()->size()));
}

std::vector<Event> maximal_null_events(const SpacePtr& space, std::span<const Event> nulls) {
    if (!space) throw std::invalid_argument("maximal_null_events: null space");
    std::vector<EventMask> masks;
    masks.reserve(nulls.size());
    for (const Event& e : nulls) {
        if (!same_space(space, e.space())) {
            throw SpaceMismatchError("null event from a different history space");
        }
        masks.push_back(e.mask());
    }
    return wrap_masks(space, maximal_of(masks, space->size()));
}

bool is_stymied(const Event& a, std::span<const Event> nulls) {
    for (const Event& null_event : nulls) {
        require_same_space(a, null_event);
        if ((a.mask() & null_event.mask()) == a.mask()) return true;
    }
    return false;
}

bool is_stymied(const Measure& mu, const Event& a) {
    if (!same_space(mu.space(), a.space())) {
        throw SpaceMismatchError("event and measure belong to different history spaces");
    }
    const auto nulls = null_masks(mu, 0);
    for (EventMask m : nulls) {
        if ((a.mask() & m) == a.mask()) return true;
    }
    return false;
}

namespace {

void check(ValidationReport& report, std::string rule, bool passed, std::string detail = "") {
    report.checks.push_back({std::move(rule), passed, std::move(detail)});
}

// Full table of measure values, indexed by mask. Only used for n small
// enough that 2^n exact evaluations are cheap.
std::vector<Rational> measure_table(const Measure& mu) {
    const std::uint64_t count = mu.space()->event_count();
    std::vector<Rational> table(count);
    if (mu.is_classical()) {
        ClassicalScanOps ops{mu.classical()};
        gray_scan(0, count, ops.at(0),
                  [&](Rational& v, EventMask c, EventMask ch, bool add) { ops.flip(v, c, ch, add); },
                  [&](EventMask mask, const Rational& v) { table[mask] = v; });
    } else {
        QuantumScanOps ops{mu.quantum()};
        gray_scan(0, count, ops.at(0),
                  [&](ComplexRational& v, EventMask c, EventMask ch, bool add) {
                      ops.flip(v, c, ch, add);
                  },
                  [&](EventMask mask, const ComplexRational& v) { table[mask] = v.re; });
    }
    return table;
}

}  // namespace

ValidationReport validate_classical(const ClassicalMeasure& mu) {
    ValidationReport report;
    const HistorySpace& space = *mu.space();
    const std::size_t n = space.size();

    bool nonneg = true;
    std::string offender;
    for (std::size_t i = 0; i < n; ++i) {
        if (mu.weights()[i] < 0) {
            nonneg = false;
            offender = space.label(i) + " has weight " + format_rational(mu.weights()[i]);
            break;
        }
    }
    check(report, "nonnegative-weights", nonneg, offender);

    const Rational total = mu.total();
    check(report, "unit-total", total == 1,
          total == 1 ? "" : "total weight is " + format_rational(total));

    // Additivity over disjoint pairs. With per-history weights this is an
    // identity, so a failure would mean evaluation itself is broken.
    bool additive = true;
    std::string additivity_detail;
    std::string coverage;
    if (n <= kExhaustiveAdditivityCap) {
        coverage = "exhaustive over all disjoint pairs";
        const std::uint64_t count = space.event_count();
        for (std::uint64_t a = 0; a < count && additive; ++a) {
            const EventMask rest = static_cast<EventMask>((count - 1) ^ a);
            // Submask walk enumerates exactly the events disjoint from a.
            for (EventMask b = rest;; b = (b - 1) & rest) {
                if (mu.evaluate_mask(static_cast<EventMask>(a) | b) !=
                    mu.evaluate_mask(static_cast<EventMask>(a)) + mu.evaluate_mask(b)) {
                    additive = false;
                    additivity_detail = "failed for " + mask_to_string(space, static_cast<EventMask>(a)) +
                                        " and " + mask_to_string(space, b);
                    break;
                }
                if (b == 0) break;
            }
        }
    } else {
        coverage = "deterministic sample of " + std::to_string(kSampleCount) + " disjoint pairs";
        std::mt19937 rng(kSampleSeed);
        std::uniform_int_distribution<std::uint64_t> dist(0, space.event_count() - 1);
        for (unsigned s = 0; s < kSampleCount && additive; ++s) {
            const EventMask a = static_cast<EventMask>(dist(rng));
            const EventMask b = static_cast<EventMask>(dist(rng)) & ~a & space.full_mask();
            if (mu.evaluate_mask(a | b) != mu.evaluate_mask(a) + mu.evaluate_mask(b)) {
                additive = false;
                additivity_detail = "failed for " + mask_to_string(space, a) + " and " +
                                    mask_to_string(space, b);
            }
        }
    }
    check(report, "additivity", additive, additive ? coverage : additivity_detail);
    return report;
}

ValidationReport validate_quantum(const QuantumMeasure& mu) {
    ValidationReport report;
    const HistorySpace& space = *mu.space();
    const std::size_t n = space.size();
    const auto& matrix = mu.decoherence();

    bool hermitian = true;
    std::string hermitian_detail;
    for (std::size_t i = 0; i < n && hermitian; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (!(matrix[i][j] == matrix[j][i].conj())) {
                hermitian = false;
                hermitian_detail = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") is not the conjugate of its transpose";
                break;
            }
        }
    }
    check(report, "hermitian", hermitian, hermitian_detail);

    const Rational total = mu.total();
    check(report, "unit-total", total == 1,
          total == 1 ? "" : "measure of the whole space is " + format_rational(total));

    bool nonneg = true;
    bool real_valued = true;
    std::string nonneg_detail, real_detail;
    std::string positivity_coverage;
    if (n <= kExhaustivePositivityCap) {
        positivity_coverage = "exhaustive over all events";
        const std::uint64_t count = space.event_count();
        QuantumScanOps ops{mu};
        gray_scan(0, count, ops.at(0),
                  [&](ComplexRational& v, EventMask c, EventMask ch, bool add) {
                      ops.flip(v, c, ch, add);
                  },
                  [&](EventMask mask, const ComplexRational& v) {
                      if (real_valued && v.im != 0) {
                          real_valued = false;
                          real_detail = "imaginary part nonzero on " + mask_to_string(space, mask);
                      }
                      if (nonneg && v.re < 0) {
                          nonneg = false;
                          nonneg_detail = mask_to_string(space, mask) + " has measure " +
                                          format_rational(v.re);
                      }
                  });
    } else {
        positivity_coverage = "diagonal entries plus a deterministic sample of " +
                              std::to_string(kSampleCount) + " events";
        for (std::size_t i = 0; i < n && nonneg; ++i) {
            if (matrix[i][i].im != 0) {
                real_valued = false;
                real_detail = "diagonal entry " + std::to_string(i) + " is not real";
            }
            if (matrix[i][i].re < 0) {
                nonneg = false;
                nonneg_detail = "diagonal entry " + std::to_string(i) + " is negative";
            }
        }
        std::mt19937 rng(kSampleSeed);
        std::uniform_int_distribution<std::uint64_t> dist(0, space.event_count() - 1);
        for (unsigned s = 0; s < kSampleCount && nonneg && real_valued; ++s) {
            const EventMask mask = static_cast<EventMask>(dist(rng));
            const ComplexRational v = mu.evaluate_mask_full(mask);
            if (v.im != 0) {
                real_valued = false;
                real_detail = "imaginary part nonzero on " + mask_to_string(space, mask);
            } else if (v.re < 0) {
                nonneg = false;
                nonneg_detail = mask_to_string(space, mask) + " has measure " + format_rational(v.re);
            }
        }
    }
    check(report, "real-valued", real_valued, real_valued ? positivity_coverage : real_detail);
    check(report, "nonnegative", nonneg, nonneg ? positivity_coverage : nonneg_detail);

    // Quadratic sum rule on pairwise-disjoint triples: the measure departs
    // from additivity only through pair interference, never triple.
    bool sum_rule = true;
    std::string sum_rule_detail;
    std::string sum_rule_coverage;
    Measure as_measure{mu};
    if (n <= kExhaustiveSumRuleCap) {
        sum_rule_coverage = "exhaustive over all disjoint triples";
        const std::vector<Rational> table = measure_table(as_measure);
        const std::uint64_t count = space.event_count();
        for (std::uint64_t a = 0; a < count && sum_rule; ++a) {
            const EventMask rest_a = static_cast<EventMask>((count - 1) ^ a);
            for (EventMask b = rest_a; sum_rule; b = (b - 1) & rest_a) {
                const EventMask rest_b = rest_a & ~b;
                for (EventMask c = rest_b;; c = (c - 1) & rest_b) {
                    const EventMask am = static_cast<EventMask>(a);
                    const Rational lhs = table[am | b | c] - table[am | b] - table[b | c] -
                                         table[am | c] + table[am] + table[b] + table[c];
                    if (lhs != 0) {
                        sum_rule = false;
                        sum_rule_detail = "I2 = " + format_rational(lhs) + " for " +
                                          mask_to_string(space, am) + ", " +
                                          mask_to_string(space, b) + ", " +
                                          mask_to_string(space, c);
                        break;
                    }
                    if (c == 0) break;
                }
                if (b == 0) break;
            }
        }
    } else {
        sum_rule_coverage = "deterministic sample of " + std::to_string(kSampleCount) + " triples";
        std::mt19937 rng(kSampleSeed);
        std::uniform_int_distribution<std::uint64_t> dist(0, space.event_count() - 1);
        for (unsigned s = 0; s < kSampleCount && sum_rule; ++s) {
            const EventMask full = space.full_mask();
            const EventMask a = static_cast<EventMask>(dist(rng));
            const EventMask b = static_cast<EventMask>(dist(rng)) & ~a & full;
            const EventMask c = static_cast<EventMask>(dist(rng)) & ~a & ~b & full;
            const Rational lhs = mu.evaluate_mask(a | b | c) - mu.evaluate_mask(a | b) -
                                 mu.evaluate_mask(b | c) - mu.evaluate_mask(a | c) +
                                 mu.evaluate_mask(a) + mu.evaluate_mask(b) + mu.evaluate_mask(c);
            if (lhs != 0) {
                sum_rule = false;
                sum_rule_detail = "I2 nonzero for a sampled triple";
            }
        }
    }
    check(report, "quadratic-sum-rule", sum_rule, sum_rule ? sum_rule_coverage : sum_rule_detail);
    return report;
}

ValidationReport validate(const Measure& mu) {
    return mu.is_classical() ? validate_classical(mu.classical()) : validate_quantum(mu.quantum());
}

}  // namespace coev

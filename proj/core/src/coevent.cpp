#include "coev/coevent.hpp"

#include <algorithm>
#include <bit>

namespace coev {

namespace {

std::size_t table_words(const HistorySpace& space) {
    return (space.event_count() + 63) / 64;
}

void require_space(const SpacePtr& space) {
    if (!space) throw std::invalid_argument("co-event needs a history space");
}

}  // namespace

CoEvent::CoEvent(SpacePtr space, std::vector<std::uint64_t> table)
    : space_(std::move(space)), table_(std::move(table)) {
    require_space(space_);
    reject_constant();
}

CoEvent::CoEvent(SpacePtr space, const std::vector<bool>& values) : space_(std::move(space)) {
    require_space(space_);
    if (values.size() != space_->event_count()) {
        throw std::invalid_argument("truth table needs exactly " +
                                    std::to_string(space_->event_count()) + " entries");
    }
    table_.assign(table_words(*space_), 0);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k]) table_[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
    reject_constant();
}

CoEvent CoEvent::from_table_string(SpacePtr space, std::string_view bits) {
    require_space(space);
    if (bits.size() != space->event_count()) {
        throw std::invalid_argument("truth table string needs exactly " +
                                    std::to_string(space->event_count()) + " characters");
    }
    std::vector<std::uint64_t> table(table_words(*space), 0);
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') {
            table[k >> 6] |= std::uint64_t{1} << (k & 63);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("truth table string must contain only '0' and '1'");
        }
    }
    return CoEvent(std::move(space), std::move(table));
}

void CoEvent::reject_constant() const {
    const std::uint64_t count = space_->event_count();
    bool any_one = false, any_zero = false;
    for (std::uint64_t k = 0; k < count && !(any_one && any_zero); ++k) {
        (value(static_cast<EventMask>(k)) ? any_one : any_zero) = true;
    }
    if (!any_one || !any_zero) {
        throw std::invalid_argument(
            "constant maps are not co-events: at least one event must be affirmed and one denied");
    }
}

bool CoEvent::operator()(const Event& a) const {
    if (!same_space(space_, a.space())) {
        throw SpaceMismatchError("co-event applied to an event of a different space");
    }
    return value(a.mask());
}

std::uint64_t CoEvent::affirmed_count() const noexcept {
    std::uint64_t count = 0;
    for (std::uint64_t word : table_) count += std::popcount(word);
    return count;
}

std::string CoEvent::table_string() const {
    const std::uint64_t count = space_->event_count();
    std::string out(count, '0');
    for (std::uint64_t k = 0; k < count; ++k) {
        if (value(static_cast<EventMask>(k))) out[k] = '1';
    }
    return out;
}

CoEventBuilder::CoEventBuilder(SpacePtr space) : space_(std::move(space)) {
    require_space(space_);
    table_.assign(table_words(*space_), 0);
}

void CoEventBuilder::set(EventMask mask, bool value) {
    if (mask >= space_->event_count()) {
        throw std::out_of_range("event mask out of range for the truth table");
    }
    const std::uint64_t bit = std::uint64_t{1} << (mask & 63);
    if (value) {
        table_[mask >> 6] |= bit;
    } else {
        table_[mask >> 6] &= ~bit;
    }
}

CoEvent CoEventBuilder::finish() { return CoEvent(space_, table_); }

void CoEventBuilder::reset() { std::fill(table_.begin(), table_.end(), 0); }

Support::Support(Event event) : event_(std::move(event)) {
    if (event_.empty()) {
        throw std::invalid_argument(
            "a support must be non-empty: the empty support would affirm everything");
    }
}

CoEvent classical_coevent(const SpacePtr& space, std::size_t history) {
    require_space(space);
    if (history >= space->size()) {
        throw std::out_of_range("history index " + std::to_string(history) + " out of range");
    }
    return from_support(Event(space, EventMask{1} << history));
}

CoEvent from_support(const Support& support) {
    const Event& f = support.event();
    CoEventBuilder builder(f.space());
    const std::uint64_t count = f.space()->event_count();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if ((mask & f.mask()) == f.mask()) builder.set(static_cast<EventMask>(mask), true);
    }
    // Affirms the unit event and denies the empty one, so never constant.
    return builder.finish();
}

CoEvent from_support(const Event& support_event) { return from_support(Support(support_event)); }

Support support_of(const CoEvent& phi) {
    const SpacePtr& space = phi.space();
    const std::uint64_t count = space->event_count();
    EventMask intersection = space->full_mask();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (phi.value(static_cast<EventMask>(mask))) intersection &= static_cast<EventMask>(mask);
    }
    if (intersection == 0) {
        throw std::invalid_argument(
            "support undefined: the affirmed events intersect to the empty event, "
            "so the co-event is not multiplicative");
    }
    // The support determines a multiplicative co-event; anything else does
    // not survive the round trip.
    const CoEvent rebuilt = from_support(Event(space, intersection));
    if (!(rebuilt == phi)) {
        throw std::invalid_argument("support undefined for a non-multiplicative co-event");
    }
    return Support(Event(space, intersection));
}

bool is_zero_preserving(const CoEvent& phi) { return !phi.value(0); }

bool is_unital(const CoEvent& phi) { return phi.value(phi.space()->full_mask()); }

bool is_multiplicative(const CoEvent& phi) {
    const std::uint64_t count = phi.space()->event_count();
    for (std::uint64_t a = 0; a < count; ++a) {
        const bool va = phi.value(static_cast<EventMask>(a));
        for (std::uint64_t b = 0; b <= a; ++b) {
            const bool vb = phi.value(static_cast<EventMask>(b));
            if (phi.value(static_cast<EventMask>(a & b)) != (va && vb)) return false;
        }
    }
    return true;
}

bool is_additive(const CoEvent& phi) {
    const std::uint64_t count = phi.space()->event_count();
    for (std::uint64_t a = 0; a < count; ++a) {
        const bool va = phi.value(static_cast<EventMask>(a));
        for (std::uint64_t b = 0; b <= a; ++b) {
            const bool vb = phi.value(static_cast<EventMask>(b));
            if (phi.value(static_cast<EventMask>(a ^ b)) != (va != vb)) return false;
        }
    }
    return true;
}

bool is_mp(const CoEvent& phi) {
    const SpacePtr& space = phi.space();
    const std::uint64_t count = space->event_count();
    const EventMask full = space->full_mask();
    for (std::uint64_t a = 0; a < count; ++a) {
        if (!phi.value(static_cast<EventMask>(a))) continue;
        for (std::uint64_t b = 0; b < count; ++b) {
            // 1 + A + AB, the complement of A\B.
            const EventMask imp =
                static_cast<EventMask>(full ^ (a & ~b & full));
            if (phi.value(imp) && !phi.value(static_cast<EventMask>(b))) return false;
        }
    }
    return true;
}

bool is_c1(const CoEvent& phi) {
    const EventMask full = phi.space()->full_mask();
    const std::uint64_t count = phi.space()->event_count();
    for (std::uint64_t a = 0; a < count; ++a) {
        if (phi.value(static_cast<EventMask>(a)) && phi.value(full ^ static_cast<EventMask>(a))) {
            return false;
        }
    }
    return true;
}

bool is_c2(const CoEvent& phi) {
    const EventMask full = phi.space()->full_mask();
    const std::uint64_t count = phi.space()->event_count();
    for (std::uint64_t a = 0; a < count; ++a) {
        if (!phi.value(static_cast<EventMask>(a)) && !phi.value(full ^ static_cast<EventMask>(a))) {
            return false;
        }
    }
    return true;
}

bool is_homomorphism(const CoEvent& phi) { return is_multiplicative(phi) && is_additive(phi); }

bool affirmed_is_filter(const CoEvent& phi) {
    const std::uint64_t count = phi.space()->event_count();
    // Non-constant already means some event is affirmed (non-empty set) and
    // some event is denied (proper subset of the algebra).
    for (std::uint64_t a = 0; a < count; ++a) {
        if (!phi.value(static_cast<EventMask>(a))) continue;
        for (std::uint64_t b = 0; b < count; ++b) {
            const bool vb = phi.value(static_cast<EventMask>(b));
            if ((a & b) == a && !vb) return false;              // superset closure
            if (vb && !phi.value(static_cast<EventMask>(a & b))) return false;  // meet closure
        }
    }
    return true;
}

bool is_preclusive(const CoEvent& phi, std::span<const Event> nulls) {
    for (const Event& n : nulls) {
        if (!same_space(phi.space(), n.space())) {
            throw SpaceMismatchError("null event from a different history space");
        }
        if (phi.value(n.mask())) return false;
    }
    return true;
}

bool is_preclusive(const CoEvent& phi, const Measure& mu) {
    if (!same_space(phi.space(), mu.space())) {
        throw SpaceMismatchError("co-event and measure belong to different history spaces");
    }
    const auto nulls = null_events(mu);
    return is_preclusive(phi, nulls);
}

bool precedes(const CoEvent& a, const CoEvent& b) {
    if (!same_space(a.space(), b.space())) {
        throw SpaceMismatchError("co-events belong to different history spaces");
    }
    const std::uint64_t count = a.space()->event_count();
    for (std::uint64_t k = 0; k < count; ++k) {
        if (b.value(static_cast<EventMask>(k)) && !a.value(static_cast<EventMask>(k))) {
            return false;
        }
    }
    return true;
}

}  // namespace coev

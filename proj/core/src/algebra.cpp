#include "coev/algebra.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace coev {

SpacePtr HistorySpace::make(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("history space needs at least one history");
    }
    if (labels.size() > kMaxHistories) {
        throw CapacityError("history space exceeds the " + std::to_string(kMaxHistories) +
                            "-history cap");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels) {
        if (label.empty()) {
            throw std::invalid_argument("history labels must be non-empty");
        }
        if (!seen.insert(label).second) {
            throw std::invalid_argument("duplicate history label: " + label);
        }
    }
    return SpacePtr(new HistorySpace(std::move(labels)));
}

const std::string& HistorySpace::label(std::size_t index) const {
    if (index >= labels_.size()) {
        throw std::out_of_range("history index " + std::to_string(index) + " out of range");
    }
    return labels_[index];
}

std::optional<std::size_t> HistorySpace::index_of(std::string_view label) const noexcept {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) noexcept {
    if (a == b) return a != nullptr;
    if (!a || !b) return false;
    return *a == *b;
}

Event::Event(SpacePtr space, EventMask mask) : space_(std::move(space)), mask_(mask) {
    if (!space_) throw std::invalid_argument("event needs a history space");
    if (mask_ > space_->full_mask()) {
        throw std::out_of_range("event mask has bits outside the history space");
    }
}

std::size_t Event::cardinality() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
}

bool Event::contains(std::size_t history) const {
    if (history >= space_->size()) {
        throw std::out_of_range("history index out of range");
    }
    return (mask_ >> history) & 1u;
}

std::vector<std::string> Event::member_labels() const {
    std::vector<std::string> out;
    out.reserve(cardinality());
    for (std::size_t i = 0; i < space_->size(); ++i) {
        if ((mask_ >> i) & 1u) out.push_back(space_->label(i));
    }
    return out;
}

Event empty_event(SpacePtr space) { return Event(std::move(space), 0); }

Event unit_event(SpacePtr space) {
    if (!space) throw std::invalid_argument("event needs a history space");
    const EventMask full = space->full_mask();
    return Event(std::move(space), full);
}

Event event_from_indices(SpacePtr space, std::span<const std::size_t> histories) {
    if (!space) throw std::invalid_argument("event needs a history space");
    EventMask mask = 0;
    for (std::size_t h : histories) {
        if (h >= space->size()) {
            throw std::out_of_range("history index " + std::to_string(h) + " out of range");
        }
        mask |= EventMask{1} << h;
    }
    return Event(std::move(space), mask);
}

Event event_from_labels(SpacePtr space, std::span<const std::string> labels) {
    if (!space) throw std::invalid_argument("event needs a history space");
    EventMask mask = 0;
    for (const auto& label : labels) {
        auto idx = space->index_of(label);
        if (!idx) throw std::invalid_argument("unknown history label: " + label);
        mask |= EventMask{1} << *idx;
    }
    return Event(std::move(space), mask);
}

void require_same_space(const Event& a, const Event& b) {
    if (!same_space(a.space(), b.space())) {
        throw SpaceMismatchError("events belong to different history spaces");
    }
}

Event product(const Event& a, const Event& b) {
    require_same_space(a, b);
    return Event(a.space(), a.mask() & b.mask());
}

Event sum(const Event& a, const Event& b) {
    require_same_space(a, b);
    return Event(a.space(), a.mask() ^ b.mask());
}

Event complement(const Event& a) {
    return Event(a.space(), a.space()->full_mask() ^ a.mask());
}

Event implies(const Event& a, const Event& b) {
    require_same_space(a, b);
    // 1 + A + AB == complement of A\B.
    const EventMask full = a.space()->full_mask();
    return Event(a.space(), full ^ (a.mask() & ~b.mask() & full));
}

Event join(const Event& a, const Event& b) {
    require_same_space(a, b);
    return Event(a.space(), a.mask() | b.mask());
}

bool is_subset(const Event& a, const Event& b) {
    require_same_space(a, b);
    return (a.mask() & b.mask()) == a.mask();
}

std::vector<Event> all_events(const SpacePtr& space) {
    if (!space) throw std::invalid_argument("all_events: null space");
    std::vector<Event> out;
    out.reserve(space->event_count());
    enumerate_events(space, [&](Event e) { out.push_back(std::move(e)); });
    return out;
}

}  // namespace coev

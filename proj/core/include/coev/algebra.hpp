#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coev/errors.hpp"

namespace coev {

class HistorySpace;

/// Shared handle to an immutable history space.
using SpacePtr = std::shared_ptr<const HistorySpace>;

/// Bitmask over history indices; bit i encodes history i in label order.
using EventMask = std::uint32_t;

/// Hard cap on histories, so event tables of 2^n entries stay predictable.
inline constexpr std::size_t kMaxHistories = 24;

/// The finite set of histories a system can realize. It fixes the event
/// algebra: every subset of the histories is an event, 2^n events in total.
/// Immutable after construction and safe to share between threads.
class HistorySpace {
public:
    /// Labels must be non-empty, distinct, and between 1 and 24 of them.
    static SpacePtr make(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t event_count() const noexcept { return std::size_t{1} << labels_.size(); }
    EventMask full_mask() const noexcept {
        return static_cast<EventMask>((std::uint64_t{1} << labels_.size()) - 1);
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t index) const;
    std::optional<std::size_t> index_of(std::string_view label) const noexcept;

    /// Spaces compare structurally: same labels in the same order.
    friend bool operator==(const HistorySpace& a, const HistorySpace& b) noexcept {
        return a.labels_ == b.labels_;
    }

private:
    explicit HistorySpace(std::vector<std::string> labels) : labels_(std::move(labels)) {}

    std::vector<std::string> labels_;
};

/// True when the two handles denote the same space (pointer or structural).
bool same_space(const SpacePtr& a, const SpacePtr& b) noexcept;

/// An element of the event algebra: a subset of one space's histories.
/// The empty mask is the zero element, the all-ones mask the unit.
class Event {
public:
    Event(SpacePtr space, EventMask mask);

    EventMask mask() const noexcept { return mask_; }
    const SpacePtr& space() const noexcept { return space_; }

    bool empty() const noexcept { return mask_ == 0; }
    bool is_unit() const noexcept { return mask_ == space_->full_mask(); }
    std::size_t cardinality() const noexcept;
    bool contains(std::size_t history) const;

    /// Member labels in history-index order.
    std::vector<std::string> member_labels() const;

    friend bool operator==(const Event& a, const Event& b) noexcept {
        return a.mask_ == b.mask_ && same_space(a.space_, b.space_);
    }

private:
    SpacePtr space_;
    EventMask mask_;
};

Event empty_event(SpacePtr space);
Event unit_event(SpacePtr space);
Event event_from_indices(SpacePtr space, std::span<const std::size_t> histories);
Event event_from_labels(SpacePtr space, std::span<const std::string> labels);

/// Throws SpaceMismatchError unless both events live in the same space.
void require_same_space(const Event& a, const Event& b);

// The ring and lattice operations of the event algebra. Product is
// intersection, sum is symmetric difference, so every event is idempotent
// (AA = A) and self-inverse (A + A = 0).
Event product(const Event& a, const Event& b);
Event sum(const Event& a, const Event& b);
Event complement(const Event& a);  // 1 + A

/// The implication event 1 + A + AB, i.e. the complement of A\B.
Event implies(const Event& a, const Event& b);

/// Set union, AB + A + B in ring arithmetic.
Event join(const Event& a, const Event& b);

/// A is a subset of B exactly when AB = A.
bool is_subset(const Event& a, const Event& b);

inline Event operator*(const Event& a, const Event& b) { return product(a, b); }
inline Event operator+(const Event& a, const Event& b) { return sum(a, b); }

/// Calls fn(Event) for all 2^n events in ascending mask order.
template <typename Fn>
void enumerate_events(const SpacePtr& space, Fn&& fn) {
    if (!space) throw std::invalid_argument("enumerate_events: null space");
    const std::uint64_t count = space->event_count();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        fn(Event(space, static_cast<EventMask>(mask)));
    }
}

/// All events, ascending mask order.
std::vector<Event> all_events(const SpacePtr& space);

}  // namespace coev

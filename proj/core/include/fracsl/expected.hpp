#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace fracsl {

/// Value-or-error result. Minimal stand-in for std::expected (C++23),
/// used where the API reports failures as values rather than exceptions.
template <typename T, typename E>
class Expected {
public:
    Expected(T value) : state_(std::in_place_index<0>, std::move(value)) {}
    Expected(E error) : state_(std::in_place_index<1>, std::move(error)) {}

    bool has_value() const noexcept { return state_.index() == 0; }
    explicit operator bool() const noexcept { return has_value(); }

    T& value() & { check(); return std::get<0>(state_); }
    const T& value() const& { check(); return std::get<0>(state_); }
    T&& value() && { check(); return std::get<0>(std::move(state_)); }

    E& error() & { return std::get<1>(state_); }
    const E& error() const& { return std::get<1>(state_); }

    T value_or(T fallback) const {
        return has_value() ? std::get<0>(state_) : std::move(fallback);
    }

private:
    void check() const {
        if (!has_value()) throw std::logic_error("Expected: value() on error state");
    }

    std::variant<T, E> state_;
};

}  // namespace fracsl

/**
 * @file result.hpp
 * @brief Minimal value-or-error carrier for validation boundaries.
 */
#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace expdioph {

/// Holds either a T (success) or an E (machine-readable failure).
/// Validation entry points return this so sweeps can aggregate the
/// failure reasons instead of catching exceptions.
template <class T, class E>
class Result {
public:
    Result(T v) : v_(std::in_place_index<0>, std::move(v)) {}
    Result(E e) : v_(std::in_place_index<1>, std::move(e)) {}

    bool ok() const { return v_.index() == 0; }
    explicit operator bool() const { return ok(); }

    const T& value() const {
        if (!ok()) throw std::logic_error("Result::value on error state");
        return std::get<0>(v_);
    }
    const E& error() const {
        if (ok()) throw std::logic_error("Result::error on success state");
        return std::get<1>(v_);
    }

private:
    std::variant<T, E> v_;
};

}  // namespace expdioph

#pragma once

#include <stdexcept>
#include <string>

namespace knotcomb {

/// Bad user input: malformed PD text, link closures, loop edges where a
/// reduced diagram is required, caps that are too small, and so on.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal cross-check failed. Always a bug: the independent routes the
/// library computes (closed forms vs. optimization, Euler data vs. delta
/// range) disagreed.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Spanning-tree enumeration exceeded the caller's cap.
class CapExceeded : public InputError {
public:
    explicit CapExceeded(long long cap)
        : InputError("spanning tree cap of " + std::to_string(cap) + " exceeded") {}
};

/// R1 reduction removed every crossing; the diagram was an unknot.
class UnknotReduced : public InputError {
public:
    UnknotReduced() : InputError("diagram reduces to the 0-crossing unknot") {}
};

inline void internal_check(bool ok, const std::string& msg) {
    if (!ok) throw InternalError(msg);
}

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

}  // namespace knotcomb

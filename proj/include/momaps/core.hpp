#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace momaps {

// Half-edges are stored as flat indices h = 4*vertex + slot.
// Even slots are outgoing (+), odd slots incoming (-).
constexpr int he_index(int vertex, int slot) { return 4 * vertex + slot; }
constexpr int he_vertex(int h) { return h >> 2; }
constexpr int he_slot(int h) { return h & 3; }
constexpr bool he_out(int h) { return (h & 1) == 0; }
constexpr int he_next(int h) { return (h & ~3) | ((h + 1) & 3); }
constexpr int he_prev(int h) { return (h & ~3) | ((h + 3) & 3); }
constexpr int he_opposite(int h) { return h ^ 2; }
constexpr int he_rotate(int h, int k) { return (h & ~3) | ((h + k) & 3); }

struct HalfEdgeRef {
    int vertex = 0;
    int slot = 0;

    int index() const { return he_index(vertex, slot); }
    bool outgoing() const { return (slot & 1) == 0; }
    static HalfEdgeRef from_index(int h) { return {he_vertex(h), he_slot(h)}; }
    auto operator<=>(const HalfEdgeRef&) const = default;
};

// Half-integer stored as its double.
struct HalfInt {
    int twice = 0;

    static HalfInt from_twice(int t) { return HalfInt{t}; }
    bool is_integer() const { return twice % 2 == 0; }
    double value() const { return twice / 2.0; }
    std::string str() const;

    HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
    auto operator<=>(const HalfInt&) const = default;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class NonHalfIntegerDegree : public Error { public: using Error::Error; };
class NotALoop : public Error { public: using Error::Error; };
class NotPlanar : public Error { public: using Error::Error; };
class InvalidColoring : public Error { public: using Error::Error; };
class NotAMelon : public Error { public: using Error::Error; };
class InconsistentSubstitution : public Error { public: using Error::Error; };

}  // namespace momaps

#pragma once

#include <stdexcept>
#include <string>

namespace lucanomial {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Zero denominator or inversion of zero.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

/// P^2 - 4Q = 0: the two roots coincide and the whole construction degenerates.
class DegenerateDiscriminant : public Error {
public:
    explicit DegenerateDiscriminant(const std::string& what = "discriminant P^2 - 4Q is zero")
        : Error(what) {}
};

/// Two surds from different quadratic extensions were combined.
class DiscriminantMismatch : public Error {
public:
    explicit DiscriminantMismatch(const std::string& what) : Error(what) {}
};

/// A surd expected to collapse to a rational kept a nonzero irrational part.
/// Signals a broken symmetry invariant upstream, not a user error.
class NotRational : public Error {
public:
    explicit NotRational(const std::string& what) : Error(what) {}
};

/// Index outside the defined range of a sequence or coefficient table.
class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/// Some sequence term L_m with 1 <= m <= n vanishes, so L-factorials are not invertible.
class DegenerateSequence : public Error {
public:
    DegenerateSequence(int index, const std::string& label)
        : Error("degenerate sequence: " + label + " term at index " + std::to_string(index) +
                " is zero"),
          index_(index) {}

    int index() const { return index_; }

private:
    int index_;
};

/// A coefficient-pair denominator vanishes at lattice site (r, s).
class SingularCoefficient : public Error {
public:
    SingularCoefficient(int r, int s, const std::string& detail)
        : Error("singular coefficient at site (" + std::to_string(r) + ", " + std::to_string(s) +
                "): " + detail),
          r_(r),
          s_(s) {}

    int site_r() const { return r_; }
    int site_s() const { return s_; }

private:
    int r_;
    int s_;
};

/// An internal cross-check failed (two exact routes disagreed). Should never be thrown.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

}  // namespace lucanomial

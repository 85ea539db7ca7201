#ifndef CARLGOSS_FIELD_HPP
#define CARLGOSS_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "carlgoss/errors.hpp"

namespace carlgoss {

// Immutable descriptor of F_{p^k} = F_p[u]/(modulus).  Instances are interned:
// two descriptors with the same (p, k, modulus) are the same object, so field
// identity checks are pointer comparisons.
struct FieldRep {
    uint32_t p;
    uint32_t k;
    std::vector<uint32_t> modulus; // monic, length k+1, coefficients mod p, constant first
    uint64_t size;                 // p^k
};

class FFElem;

class Field {
public:
    Field() : rep_(nullptr) {}

    // Canonical field: modulus is the lexicographically first monic irreducible
    // of degree k over F_p in constant-coefficient-fastest enumeration order.
    static Field make(uint32_t p, uint32_t k);
    static Field make(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus);

    const FieldRep* rep() const { return rep_; }
    bool valid() const { return rep_ != nullptr; }
    uint32_t p() const { return rep_->p; }
    uint32_t k() const { return rep_->k; }
    uint64_t size() const { return rep_->size; }
    const std::vector<uint32_t>& modulus() const { return rep_->modulus; }

    FFElem zero() const;
    FFElem one() const;
    FFElem gen() const;               // class of u
    FFElem from_int(uint64_t n) const; // n mod p as a constant
    FFElem from_digits(const std::vector<uint32_t>& digits) const;
    // Elements are indexed 0..size-1 by sum digit_i * p^i; used for canonical
    // enumeration order everywhere.
    FFElem element(uint64_t index) const;

    bool operator==(const Field& o) const { return rep_ == o.rep_; }
    bool operator!=(const Field& o) const { return rep_ != o.rep_; }

    std::string describe() const; // "F_9 = F_3[u]/(u^2+1)"

private:
    explicit Field(const FieldRep* rep) : rep_(rep) {}
    const FieldRep* rep_;
};

// Element of an interned field.  Stored as the k residue digits of its
// representative polynomial in u, constant coefficient first.
class FFElem {
public:
    using Digits = boost::container::small_vector<uint32_t, 4>;

    FFElem() = default;
    FFElem(Field f, Digits d) : f_(f), c_(std::move(d)) {}

    Field field() const { return f_; }
    const Digits& digits() const { return c_; }
    uint32_t digit(uint32_t i) const { return c_[i]; }

    bool is_zero() const;
    bool is_one() const;
    uint64_t index() const; // sum c_i p^i

    FFElem operator+(const FFElem& o) const;
    FFElem operator-(const FFElem& o) const;
    FFElem operator-() const;
    FFElem operator*(const FFElem& o) const;
    FFElem operator/(const FFElem& o) const;
    FFElem inv() const;
    FFElem pow(uint64_t e) const;
    bool operator==(const FFElem& o) const;
    bool operator!=(const FFElem& o) const { return !(*this == o); }

    std::string to_string() const; // "0", "2", "u+1", "2*u^2"

private:
    void check_same(const FFElem& o) const;
    Field f_;
    Digits c_;
};

// x^(q^e) where q is the size of the base field being acted by; q must be a
// power of the characteristic of x's field.
FFElem ff_frobenius(const FFElem& x, uint32_t e, uint64_t q);

// Image of the generator of `sub` under the canonical embedding of sub into
// sup (lexicographically first root of sub's modulus in sup).  Requires same
// characteristic and sub.k | sup.k.
FFElem subfield_generator_image(Field sub, Field sup);

// Apply an embedding given by the image of sub's generator.
FFElem embed_elem(const FFElem& x, Field sup, const FFElem& gen_image);

} // namespace carlgoss

#endif

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qgda/extension.hpp"

namespace qgda {

// Deterministic source of small random algebra values: coefficients stay
// within |numerator| <= 9 and denominator <= 4 so failure witnesses stay
// readable; exactness makes sample count, not magnitude, the coverage lever.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    long small_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rational small_rational() {
        return Rational(small_int(-9, 9), small_int(1, 4));
    }

    CyclotomicNumber scalar(const CyclotomicField::Ptr& field) {
        std::vector<Rational> coords(field->degree());
        for (auto& c : coords) c = small_rational();
        return field->from_coords(std::move(coords));
    }

    BaseElement base_element(const BaseAlgebra::Ptr& algebra) {
        BaseAlgebra::Coords coords;
        coords.reserve(algebra->dim());
        for (int i = 0; i < algebra->dim(); ++i)
            coords.push_back(scalar(algebra->field()));
        return algebra->element(std::move(coords));
    }

    ExtElement ext_element(const ExtAlgebra::Ptr& algebra) {
        std::vector<BaseElement> parts;
        parts.reserve(algebra->n());
        for (int k = 0; k < algebra->n(); ++k)
            parts.push_back(base_element(algebra->base()));
        return algebra->from_parts(std::move(parts));
    }

    ExtElement homogeneous(const ExtAlgebra::Ptr& algebra) {
        const int grade = static_cast<int>(small_int(0, algebra->n() - 1));
        return algebra->embed_at(grade, base_element(algebra->base()));
    }

    std::string byte_string(std::size_t max_len) {
        std::uniform_int_distribution<int> byte(0, 255);
        std::uniform_int_distribution<std::size_t> len(0, max_len);
        std::string s(len(rng_), '\0');
        for (auto& ch : s) ch = static_cast<char>(byte(rng_));
        return s;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace qgda

#ifndef NCRES_SCALAR_TRAITS_HPP
#define NCRES_SCALAR_TRAITS_HPP

#include <complex>

#include <ncres/cyclotomic.hpp>
#include <ncres/exact_scalar.hpp>

namespace ncres
{

// Coefficient fields the symbol calculus is instantiated over.
template <typename C>
struct scalar_traits;

template <>
struct scalar_traits<ComplexRational> {
    static constexpr bool exact = true;
    static bool is_zero(const ComplexRational &c)
    {
        return c.is_zero();
    }
    static ComplexRational from(const ComplexRational &c)
    {
        return c;
    }
    static ComplexRational conj(const ComplexRational &c)
    {
        return c.conj();
    }
    static std::complex<double> to_complex(const ComplexRational &c)
    {
        return c.to_complex();
    }
};

template <>
struct scalar_traits<CyclotomicScalar> {
    static constexpr bool exact = true;
    static bool is_zero(const CyclotomicScalar &c)
    {
        return c.is_zero();
    }
    static CyclotomicScalar from(const ComplexRational &c)
    {
        return CyclotomicScalar(c);
    }
    static CyclotomicScalar conj(const CyclotomicScalar &c)
    {
        return c.conj();
    }
    static std::complex<double> to_complex(const CyclotomicScalar &c)
    {
        return c.to_complex();
    }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static bool is_zero(const std::complex<double> &c)
    {
        return c == 0.0;
    }
    static std::complex<double> from(const ComplexRational &c)
    {
        return c.to_complex();
    }
    static std::complex<double> conj(const std::complex<double> &c)
    {
        return std::conj(c);
    }
    static std::complex<double> to_complex(const std::complex<double> &c)
    {
        return c;
    }
};

} // namespace ncres

#endif

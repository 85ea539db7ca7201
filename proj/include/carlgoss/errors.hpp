#ifndef CARLGOSS_ERRORS_HPP
#define CARLGOSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carlgoss {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CARLGOSS_DEFINE_ERROR(Name)                        \
    struct Name : error {                                  \
        using error::error;                                \
        Name() : error(#Name) {}                           \
    }

CARLGOSS_DEFINE_ERROR(NonPrimeCharacteristic);
CARLGOSS_DEFINE_ERROR(ReducibleModulus);
CARLGOSS_DEFINE_ERROR(FieldMismatch);
CARLGOSS_DEFINE_ERROR(DivisionByZero);
CARLGOSS_DEFINE_ERROR(DivisionByZeroPoly);
CARLGOSS_DEFINE_ERROR(ZeroPolynomial);
CARLGOSS_DEFINE_ERROR(PrecisionExhausted);
CARLGOSS_DEFINE_ERROR(InvertZero);
CARLGOSS_DEFINE_ERROR(PrimeMismatch);
CARLGOSS_DEFINE_ERROR(NotIrreducible);
CARLGOSS_DEFINE_ERROR(NotBaseField);
CARLGOSS_DEFINE_ERROR(ZDegreeOverflow);
CARLGOSS_DEFINE_ERROR(OutsideDomain);
CARLGOSS_DEFINE_ERROR(UnsupportedRing);
CARLGOSS_DEFINE_ERROR(ZeroIdeal);
CARLGOSS_DEFINE_ERROR(DegreeBoundViolated);
CARLGOSS_DEFINE_ERROR(NonCyclicUnexpected);
CARLGOSS_DEFINE_ERROR(NotInUnitImage);
CARLGOSS_DEFINE_ERROR(ResidualTooLarge);
CARLGOSS_DEFINE_ERROR(NotReal);
CARLGOSS_DEFINE_ERROR(SingularToPrec);
CARLGOSS_DEFINE_ERROR(WrongCharacteristic);

#undef CARLGOSS_DEFINE_ERROR

} // namespace carlgoss

#endif

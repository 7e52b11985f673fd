#ifndef GAMMAFORMS_ERRORS_HPP
#define GAMMAFORMS_ERRORS_HPP

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gammaforms {

/* Bad input: malformed form, wrong discriminant, violated precondition. */
class validation_error : public std::invalid_argument
{
    public:
    using std::invalid_argument::invalid_argument;
};

/* The requested level has no reduction theory implemented here. */
class unsupported_level : public std::domain_error
{
    public:
    using std::domain_error::domain_error;
};

/* A bounded search ran past its safety limit without finding a witness. */
class safety_bound_exceeded : public std::runtime_error
{
    public:
    using std::runtime_error::runtime_error;
};

/* Environment variable that overrides every search safety bound. */
inline constexpr char const * max_search_env = "GAMMA_FORMS_MAX_SEARCH";

/* Returns the value of GAMMA_FORMS_MAX_SEARCH when set to a positive
 * integer, otherwise the given default. */
mpz_class search_bound(mpz_class const & default_bound);

} // namespace gammaforms

#endif

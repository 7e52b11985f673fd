#ifndef GAMMAFORMS_CLI_HPP
#define GAMMAFORMS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gammaforms::cli {

enum exit_code : int
{
    ok = 0,
    failure = 1,
    validation = 2,
    unsupported = 3,
    safety_bound = 4,
};

/* Runs the command line (args excludes the program name). */
int run(std::vector<std::string> const & args, std::ostream & out,
        std::ostream & err);

} // namespace gammaforms::cli

#endif

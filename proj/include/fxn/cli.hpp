#ifndef FXN_CLI_HPP
#define FXN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fxn::cli {

/// Exit statuses of `run`.
enum Status : int {
    ok = 0,
    parse_error = 2,     // malformed arguments, field or polynomial text
    out_of_scope = 3,    // no applicable method, or a method's preconditions fail
    internal_error = 4,  // a verification or guaranteed identity failed
};

/*
    fxnsplit factor            --field F --poly f --n N [--mode M] [--seed S] [--output text|json] [--verify]
    fxnsplit cyclotomic        --q Q --p P --t T --n N [--field F] [--seed S] [--output text|json] [--verify]
    fxnsplit irreducible-check --field F --poly f --n N [--output text|json]

    Mode auto tries, in order: f(x^n) irreducible, the reducible condition
    (iterated prime-power splitting), the radical route, the quadratic
    extension route; anything else exits with out_of_scope.
*/
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fxn::cli

#endif

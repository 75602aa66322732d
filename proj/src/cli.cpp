#include "lombardi/cli.h"

namespace lombardi {

int cli_run(const std::vector<std::string>&, std::istream&, std::ostream&,
            std::ostream& err) {
    err << "not yet wired\n";
    return 2;
}

}  // namespace lombardi

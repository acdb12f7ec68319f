#pragma once

#include <ostream>

namespace riccati {

/// Entry point of the riccati_lab tool. Results go to `out`, diagnostics to
/// `err`. Returns 1 on malformed input, 2 on solver errors, 0 otherwise.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riccati

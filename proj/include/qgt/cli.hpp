// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qgt {

// Exit codes: 0 success, 1 non-convergence or check failure, 2 usage/parse
// error, 3 validation error.
int run_cli(int argc, const char* const* argv);

}  // namespace qgt

// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace pcsched {

/// Entry point behind the pcsched binary; exposed so tests can drive the
/// CLI in-process. Exit codes: 0 success, 1 verification/infeasibility
/// failure, 2 usage or configuration error.
int cli_main(int argc, const char* const* argv);

}  // namespace pcsched

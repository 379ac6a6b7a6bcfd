// SPDX-License-Identifier: Apache-2.0
#include "qgt/cli.hpp"

int main(int argc, char** argv) { return qgt::run_cli(argc, argv); }

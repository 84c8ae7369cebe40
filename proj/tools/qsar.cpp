#include "qsar/cli.hpp"

int main(int argc, char** argv) { return qsar::cli::run_main(argc, argv); }

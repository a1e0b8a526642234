#include "hac/cli_app.hpp"

int main(int argc, char** argv) { return hac::run_cli(argc, argv); }

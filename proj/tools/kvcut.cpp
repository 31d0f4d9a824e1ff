#include "kvcut/cli.hpp"

int main(int argc, char** argv) { return kvcut::cli_main(argc, argv); }

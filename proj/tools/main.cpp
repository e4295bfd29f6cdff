#include "wb/report.hpp"

int main(int argc, char **argv) { return wb::cli_main(argc, argv); }

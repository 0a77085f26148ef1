#include "hamc/cli.hpp"

int main(int argc, char** argv) { return hamc::dispatch(argc, argv); }

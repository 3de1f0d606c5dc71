#include "cli_app.hpp"

int main(int argc, char** argv) { return mdioph::cli::run(argc, argv); }

#include "speczeta/cli.hpp"

int main(int argc, char** argv)
{
    return speczeta::cli::run(argc, argv);
}

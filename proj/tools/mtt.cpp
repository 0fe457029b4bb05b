#include <string>
#include <vector>

#include "mtt/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return mtt::run_cli(args);
}

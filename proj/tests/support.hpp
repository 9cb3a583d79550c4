#pragma once

#include <string>

#include "leavitt/quiver.hpp"

inline leavitt::Quiver battery(const std::string& name)
{
    return leavitt::load_quiver(std::string(LEAVITT_DATA_DIR) + "/quivers/" + name + ".quiver");
}

inline const char* battery_names[] = {"one_loop", "two_loop", "two_cycle", "branching"};

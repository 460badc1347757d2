#pragma once

#include "seaplan/simulator.hpp"

namespace seaplan {

/// Single head-on encounter: ego (0,0) heading North at 10 m/s toward
/// (7000,0); V1 starts at (6000,0) heading 180 at 10 m/s; one generated
/// shallow region off the port side of the corridor.
Scenario make_case_a();

/// Head-on plus starboard crossing: V1 (3500,2500) heading 270, V2
/// (6000,0) heading 180, both 10 m/s; three generated shallow regions.
Scenario make_case_b();

}  // namespace seaplan

#pragma once

namespace vnum {

/// Worker cap for the OpenMP kernels. 0 means "use the OpenMP default".
/// Every kernel produces schedule-independent results, so this knob only
/// affects speed, never output.
void set_max_jobs(int jobs);
int max_jobs();

/// Effective worker count for a loop of the given size: respects the cap,
/// the OpenMP runtime, and never exceeds the trip count.
int workers_for(int trip_count);

} // namespace vnum

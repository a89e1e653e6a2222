#ifndef STATCORE_REFERENCE_ORACLE_H
#define STATCORE_REFERENCE_ORACLE_H

#include "statcore/gate_model.h"
#include "statcore/transforms.h"

namespace statcore {

// Conventional data-moving execution. Each step physically exchanges the entries named by
// swap_pairs. Kept naive on purpose: it is the yardstick StateCore is checked against.

LogicalVector dense_apply_step(LogicalVector vec, const GateStep &step);

LogicalVector run_dense(const Circuit &circuit, LogicalVector start);

}  // namespace statcore

#endif

#ifndef VFREE_VF_LANG_HPP
#define VFREE_VF_LANG_HPP

#include "vfree/gog.hpp"
#include "vfree/pda.hpp"
#include "vfree/rewrite.hpp"

namespace vf {

/// The rewriting system ab -> w(a,b) r(a,b) over Delta, no-op rules dropped.
/// Validates the tables: w freely reduced, triple products consistent; an
/// inconsistent table raises an input error naming the failing triple.
SemiThueSystem build_vf_system(const VFStructure& vf);

/// Deterministic PDA for the word problem: states R and a primed copy R'
/// (primed = empty stack), stack alphabet the free letters plus primed
/// copies marking the stack bottom, window constant m = max |w(r,a)|.
Pda vf_det_pda(const VFStructure& vf);

/// Window constant of the structure.
int vf_window_constant(const VFStructure& vf);

}  // namespace vf

#endif

#pragma once

// Exact-arithmetic toolkit for almost homogeneous curves: tail semigroups,
// stable subalgebras of truncated algebras, Ferrand pinchings with conductor
// ideals and seminormality tests, Russell forms of the additive group, the
// classification label engine, and (equivariant) Picard groups via the
// Units-Pic sequence, all brute-force checkable over small finite fields.

#include "pincurve/abelian.hpp"
#include "pincurve/artinian.hpp"
#include "pincurve/classify.hpp"
#include "pincurve/errors.hpp"
#include "pincurve/field_descriptor.hpp"
#include "pincurve/finite_field.hpp"
#include "pincurve/function_field.hpp"
#include "pincurve/json_io.hpp"
#include "pincurve/linalg.hpp"
#include "pincurve/mpoly.hpp"
#include "pincurve/picard.hpp"
#include "pincurve/pinching.hpp"
#include "pincurve/rationals.hpp"
#include "pincurve/root_algebra.hpp"
#include "pincurve/russell.hpp"
#include "pincurve/semigroup.hpp"
#include "pincurve/stability.hpp"
#include "pincurve/unit_group.hpp"
#include "pincurve/upoly.hpp"

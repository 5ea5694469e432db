#pragma once

#include "riemann_bounds/bloodflow.hpp"
#include "riemann_bounds/courant.hpp"
#include "riemann_bounds/errors.hpp"
#include "riemann_bounds/euler.hpp"
#include "riemann_bounds/root_finding.hpp"
#include "riemann_bounds/shallow.hpp"
#include "riemann_bounds/types.hpp"

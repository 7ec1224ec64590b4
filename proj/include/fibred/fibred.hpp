#pragma once

#include "fibred/rational.hpp"
#include "fibred/error.hpp"
#include "fibred/invariants.hpp"
#include "fibred/polynomial.hpp"
#include "fibred/affine.hpp"
#include "fibred/catalog.hpp"
#include "fibred/hyperelliptic.hpp"
#include "fibred/inequalities.hpp"
#include "fibred/thresholds.hpp"
#include "fibred/certificate.hpp"
#include "fibred/torelli.hpp"
#include "fibred/document.hpp"

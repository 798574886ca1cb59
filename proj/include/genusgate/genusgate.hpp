#pragma once

#include "genusgate/error.hpp"
#include "genusgate/integers.hpp"
#include "genusgate/polynomial.hpp"
#include "genusgate/modp.hpp"
#include "genusgate/sturm.hpp"
#include "genusgate/interval.hpp"
#include "genusgate/numberfield.hpp"
#include "genusgate/zeta.hpp"
#include "genusgate/bounds.hpp"
#include "genusgate/torsion.hpp"
#include "genusgate/ramsearch.hpp"
#include "genusgate/fielddb.hpp"
#include "genusgate/prover.hpp"
#include "genusgate/version.hpp"

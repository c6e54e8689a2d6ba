#pragma once

#include "vcg/catalog.hpp"
#include "vcg/colimit.hpp"
#include "vcg/cover.hpp"
#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/free_product.hpp"
#include "vcg/group_io.hpp"
#include "vcg/homology.hpp"
#include "vcg/integer.hpp"
#include "vcg/lattice.hpp"
#include "vcg/local_lattice.hpp"
#include "vcg/products.hpp"
#include "vcg/report.hpp"
#include "vcg/scenarios.hpp"
#include "vcg/system_file.hpp"
#include "vcg/todd_coxeter.hpp"
#include "vcg/variety.hpp"
#include "vcg/word.hpp"

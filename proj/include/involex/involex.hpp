#ifndef INVOLEX_INVOLEX_HPP_
#define INVOLEX_INVOLEX_HPP_

#include "involex/element_set.hpp"
#include "involex/enumerator.hpp"
#include "involex/error.hpp"
#include "involex/families.hpp"
#include "involex/group.hpp"
#include "involex/morphisms.hpp"
#include "involex/pipeline.hpp"
#include "involex/presentation.hpp"
#include "involex/starcheck.hpp"

#endif  // INVOLEX_INVOLEX_HPP_

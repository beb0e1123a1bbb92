#pragma once

#include "tercert/certifier.hpp"
#include "tercert/errors.hpp"
#include "tercert/field.hpp"
#include "tercert/geometry.hpp"
#include "tercert/gup.hpp"
#include "tercert/hilbert.hpp"
#include "tercert/linalg.hpp"
#include "tercert/matrix.hpp"
#include "tercert/oracle.hpp"
#include "tercert/prooflab.hpp"

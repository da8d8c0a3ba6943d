#pragma once

#include <froblab/scalar.hpp>
#include <froblab/matrix.hpp>
#include <froblab/morphism.hpp>
#include <froblab/diagram.hpp>
#include <froblab/evaluate.hpp>
#include <froblab/algebra.hpp>
#include <froblab/functor.hpp>
#include <froblab/law_report.hpp>
#include <froblab/yang_baxter.hpp>
#include <froblab/cauchy.hpp>
#include <froblab/distributive.hpp>
#include <froblab/bimonoid.hpp>
#include <froblab/prebimonoidal.hpp>
#include <froblab/chain.hpp>
#include <froblab/random.hpp>
#include <froblab/catalog.hpp>
#include <froblab/io.hpp>
#include <froblab/laws.hpp>
#include <froblab/scenarios.hpp>
#include <froblab/fuzz.hpp>

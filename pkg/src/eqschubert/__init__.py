import eqschubert.config as config
import eqschubert.coords as coords
import eqschubert.logging as logging
import eqschubert.polynomial as polynomial
import eqschubert.presentations as presentations
import eqschubert.roots as roots
import eqschubert.serialization as serialization
import eqschubert.store as store
import eqschubert.structconst as structconst
import eqschubert.visualization as visualization
import eqschubert.weyl as weyl
from eqschubert.roots import build_root_system
from eqschubert.store import current_store

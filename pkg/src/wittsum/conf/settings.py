from ..appsettings import AppSettings
from ..helpers import get_env
from .constants import SCHEMA_VERSION

__all__ = ("configure_wittsum", "Wittsum")


# Dotted path to the project settings module.
# eg. WITTSUM_SETTINGS_MODULE=demo.settings
settings_module = get_env('WITTSUM_SETTINGS_MODULE', None)


def configure_wittsum(project_settings=None):
    """
    Merges env-defined, project-defined and default settings.

    :param str project_settings: dotted path to a settings module,
        defaults to `$WITTSUM_SETTINGS_MODULE`.
    :return: the configured settings object.
    """
    settings = Wittsum()
    settings(project_settings or settings_module)
    return settings


class Wittsum(AppSettings):
    """
    Default settings for wittsum.
    A value of `None` signifies a required setting, unless listed in `optional_settings`.
    """

    optional_settings = ("guard", "threads")
    nullable_types = {"guard": int, "threads": int}

    LOG_LEVEL = 'INFO'
    SCHEMA_VERSION = SCHEMA_VERSION

    # use lowercase names inside the `WITTSUM` setting
    WITTSUM = {

        # CAPS
        # =============================================================================================
        # field_cap: largest field size p**deg accepted by `build_field`.
        # witt_length_cap: largest Witt length m for the universal polynomials.
        # monomial_cap: largest Laurent support allowed during Witt arithmetic.
        # dim_cap: largest ambient dimension n of a Newton polyhedron.
        "field_cap": 2 ** 20,
        "witt_length_cap": 4,
        "monomial_cap": 4096,
        "dim_cap": 3,

        # BUDGETS
        # =============================================================================================
        # enum_budget: largest lattice box enumerated when counting weights.
        # sum_budget: largest total number of torus points evaluated in a run.
        "enum_budget": 2_000_000,
        "sum_budget": 10 ** 7,

        # L-FUNCTION
        # =============================================================================================
        # smax: extension bound of the torus search for n = 3 non-degeneracy.
        # guard: vanishing tail checked beyond the expected degree, `None` -> max(2, d).
        # reconstruct_dmax: largest order tried by the rational reconstruction.
        # tolerance: relative tolerance of the archimedean weight checks.
        # precision: decimal digits of complex embeddings.
        "smax": 3,
        "guard": None,
        "reconstruct_dmax": 6,
        "tolerance": 1e-9,
        "precision": 50,

        # WORKERS
        # =============================================================================================
        # threads: worker processes for torus sums, `None` -> physical core count.
        # chunks_per_worker: enumeration chunks handed to each worker.
        "threads": None,
        "chunks_per_worker": 4,
    }

    def validate_config(self, config):
        unknown = set(config) - set(self.defaults[self.config_key])
        if unknown:
            raise KeyError(f"Unknown WITTSUM setting(s): {', '.join(sorted(unknown))}")
        return True

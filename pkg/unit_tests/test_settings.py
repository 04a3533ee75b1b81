import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import pytest

from settings import ENV_PREFIX, Settings, get_settings, settings_from_env


def test_defaults_match_documented_tolerances():
    s = settings_from_env({})
    assert s == Settings()
    assert s.hermitian_tolerance == 1e-12
    assert s.positivity_tolerance == 1e-10
    assert s.sphere_grid_points == 20000
    assert s.seed == 343


def test_overrides_are_cast_to_field_type():
    s = settings_from_env({ENV_PREFIX + "SPHERE_GRID_POINTS": "4000", ENV_PREFIX + "WITNESS_TOLERANCE": "1e-9"})
    assert s.sphere_grid_points == 4000
    assert isinstance(s.sphere_grid_points, int)
    assert s.witness_tolerance == 1e-9


def test_blank_override_is_ignored():
    assert settings_from_env({ENV_PREFIX + "REFINE_STARTS": "  "}).refine_starts == 20


def test_seed_may_be_zero():
    assert settings_from_env({ENV_PREFIX + "SEED": "0"}).seed == 0


@pytest.mark.parametrize(
    "key,raw",
    [("SPHERE_GRID_POINTS", "many"), ("WITNESS_TOLERANCE", "-1e-9"), ("RANK_TOLERANCE_SCALE", "0")],
)
def test_bad_override_names_variable(key, raw):
    with pytest.raises(ValueError, match=ENV_PREFIX + key):
        settings_from_env({ENV_PREFIX + key: raw})


def test_as_dict_lists_every_field():
    d = Settings().as_dict()
    assert d["sign_enumeration_cap"] == 12
    assert set(d) >= {"seed", "method_agreement", "method_disagreement", "real_reference_grid"}


def test_get_settings_is_cached():
    assert get_settings() is get_settings()

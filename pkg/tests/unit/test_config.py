"""Tests for configuration loading."""

import pytest

from zsigil.config.loader import load_config, load_config_from_dict
from zsigil.config.schema import SigilConfig
from zsigil.exceptions import ConfigFileNotFoundError, ConfigValidationError
from zsigil.geometry.manifold import TorusModel


class TestDefaults:
    """Tests for the default configuration."""

    def test_defaults(self):
        config = load_config_from_dict({})
        assert config.manifold.dimension == 6
        assert config.manifold.section_cutoff == 2
        assert config.analytic.zeros_per_block == 3
        assert config.scheme.rounding_tolerance == 1e-3
        assert config.scheme.max_blocks == 65536
        assert config.attack.gate_degree == 2

    def test_defaults_match_schema(self):
        assert load_config_from_dict({}) == SigilConfig()

    def test_model_from_config(self):
        model = TorusModel.from_config(load_config_from_dict({}).manifold)
        assert model == TorusModel.unit(6)


class TestValidation:
    """Tests for rejected configurations."""

    def test_odd_dimension(self):
        with pytest.raises(ConfigValidationError):
            load_config_from_dict({"manifold": {"dimension": 5}})

    def test_moduli_length(self):
        with pytest.raises(ConfigValidationError):
            load_config_from_dict({"manifold": {"dimension": 2, "moduli": [1.0]}})

    def test_moduli_range(self):
        with pytest.raises(ConfigValidationError):
            load_config_from_dict({"manifold": {"dimension": 2, "moduli": [1.0, 2.0]}})

    def test_beta_must_exceed_one(self):
        with pytest.raises(ConfigValidationError):
            load_config_from_dict({"analytic": {"spectrum_beta": 1.0}})

    def test_rounding_tolerance_below_half(self):
        with pytest.raises(ConfigValidationError):
            load_config_from_dict({"scheme": {"rounding_tolerance": 0.5}})

    def test_reversed_range(self):
        with pytest.raises(ConfigValidationError):
            load_config_from_dict({"fiber": {"keymap_a_range": [2.0, 0.5]}})


class TestLoadConfig:
    """Tests for YAML config files."""

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigFileNotFoundError):
            load_config(str(tmp_path / "absent.yaml"))

    def test_partial_file_merges_defaults(self, tmp_path):
        path = tmp_path / "sigil_config.yaml"
        path.write_text("manifold:\n  dimension: 4\nattack:\n  workers: 2\n")
        config = load_config(str(path))
        assert config.manifold.dimension == 4
        assert config.manifold.section_cutoff == 2
        assert config.attack.workers == 2

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_config(str(path)) == SigilConfig()

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("manifold: [unclosed\n")
        with pytest.raises(ConfigValidationError):
            load_config(str(path))

    def test_root_must_be_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigValidationError):
            load_config(str(path))

    def test_unknown_section(self):
        with pytest.raises(ConfigValidationError, match="manifolds"):
            load_config_from_dict({"manifolds": {"dimension": 4}})

    def test_unsupported_version(self):
        with pytest.raises(ConfigValidationError, match="version"):
            load_config_from_dict({"version": "2.0"})

    def test_numeric_version_accepted(self, tmp_path):
        path = tmp_path / "sigil_config.yaml"
        path.write_text("version: 1.0\n")
        assert load_config(path).version == "1.0"

    def test_error_names_the_field(self):
        with pytest.raises(ConfigValidationError, match="manifold.dimension"):
            load_config_from_dict({"manifold": {"dimension": "six"}})

    def test_defaults_not_mutated(self):
        load_config_from_dict({"manifold": {"dimension": 4}})
        assert load_config_from_dict({}).manifold.dimension == 6

from betti_bounds.services.survey_runner import SurveyRunner

__all__ = ["SurveyRunner"]

import factory
from factory.django import DjangoModelFactory

from apps.reports.models import RunReport


class RunReportFactory(DjangoModelFactory):
    class Meta:
        model = RunReport

    command = factory.Faker('sentence', nb_words=3)
    inputs_digest = factory.Faker('sha256')
    status = RunReport.Status.PASS
    duration = factory.Faker('pyfloat', min_value=0, max_value=10)
    results = factory.LazyFunction(
        lambda: [{'name': 'memory', 'value': 2, 'expected': 2, 'passed': True, 'note': ''}]
    )

    class Params:
        failing = factory.Trait(
            status=RunReport.Status.FAIL,
            results=factory.LazyFunction(
                lambda: [{'name': 'memory', 'value': 3, 'expected': 2, 'passed': False, 'note': ''}]
            ),
        )

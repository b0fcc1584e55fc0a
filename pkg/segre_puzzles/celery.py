"""Celery config for suite workers."""

from celery import Celery

from segre_puzzles import config

app = Celery(
    'segre_puzzles',
    broker=config.CELERY_BROKER_URL,
    backend=config.CELERY_RESULT_BACKEND,
)
app.conf.update(
    task_always_eager=config.CELERY_ALWAYS_EAGER,
    task_eager_propagates=True,
    task_serializer='json',
    result_serializer='json',
    accept_content=['json'],
)
app.autodiscover_tasks(['segre_puzzles'])

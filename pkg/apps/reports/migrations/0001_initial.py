# Generated by Django 5.0.14 on 2026-10-17 09:12

import uuid
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='RunReport',
            fields=[
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('command', models.CharField(help_text='Command line as typed', max_length=255)),
                ('inputs_digest', models.CharField(blank=True, help_text='SHA-256 of the input files and parameters', max_length=64)),
                ('results', models.JSONField(default=list, help_text='Rows of name, value, expected, passed, note')),
                ('status', models.CharField(choices=[('PASS', 'Pass'), ('FAIL', 'Fail'), ('ERROR', 'Input error')], default='PASS', max_length=10)),
                ('duration', models.FloatField(default=0.0, help_text='Wall-clock seconds')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'verbose_name': 'Run report',
                'verbose_name_plural': 'Run reports',
                'db_table': 'run_reports',
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['status'], name='run_reports_status_idx'), models.Index(fields=['created_at'], name='run_reports_created_idx')],
            },
        ),
    ]

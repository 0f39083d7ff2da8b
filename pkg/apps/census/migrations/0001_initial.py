# Generated by Django 6.0 on 2026-10-19 10:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CensusEntry',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('kind', models.CharField(choices=[('tet', 'Tetrahedron'), ('oct', 'Octahedron')], max_length=3)),
                ('count', models.PositiveSmallIntegerField()),
                ('signature', models.CharField(max_length=255)),
                ('cusp_count', models.PositiveSmallIntegerField()),
                ('distribution', models.CharField(help_text='Vertices per cusp, ascending and comma separated', max_length=100)),
                ('homology', models.CharField(blank=True, max_length=100)),
                ('volume', models.FloatField(blank=True, null=True)),
                ('gluing', models.JSONField()),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'verbose_name_plural': 'Census entries',
                'ordering': ['kind', 'count', 'signature'],
                'constraints': [models.UniqueConstraint(fields=('kind', 'count', 'signature'), name='unique_census_signature')],
            },
        ),
    ]

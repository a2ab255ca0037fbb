struct student {
    char name[20];
    int score;
};

int main()
{
    struct student list[50];
    int size, total = 0;
    scanf("%d", &size);
    for (int i = 0; i < size; i++) {
        scanf("%s %d", list[i].name, &list[i].score);
        total += list[i].score;
    }
    printf("%d %.2f\n", total, (double)total / size);
    return 0;
}

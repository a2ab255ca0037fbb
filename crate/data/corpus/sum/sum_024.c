struct rec {
    char name[20];
    int score;
};

int main()
{
    struct rec list[50];
    int num, total = 0;
    int i;
    scanf("%d", &num);
    for (i = 0; i < num; i++) {
        scanf("%s %d", list[i].name, &list[i].score);
        total += list[i].score;
    }
    printf("%d %.2f\n", total, (double)total / num);
    return 0;
}
